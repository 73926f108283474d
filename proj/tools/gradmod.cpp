// Command-line front end: reads a JSON instance, runs the requested
// computation under the guarded truncation protocol and prints a report.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gradmod/corpus.hpp"
#include "gradmod/errors.hpp"
#include "gradmod/pipeline.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kComputation = 4, kVerify = 5 };

struct CliOptions {
    std::string input;
    int cap = 7;
    int max_cap = 10;
    uint64_t seed = 42;
    int window = -1;
    uint32_t p = 0;
    std::string format = "table";
    bool seed_given = false;
};

gradmod::PipelineOptions to_pipeline(const CliOptions& cli, const gradmod::InstanceFile& inst) {
    gradmod::PipelineOptions opt;
    opt.start_cap = cli.cap;
    opt.max_cap = cli.max_cap;
    opt.seed = cli.seed_given ? cli.seed : inst.seed.value_or(cli.seed);
    opt.window = cli.window;
    opt.p_override = cli.p;
    return opt;
}

void emit(const gradmod::PipelineResult& res, const std::string& format) {
    if (format == "json")
        std::cout << gradmod::report_to_json_text(res) << "\n";
    else
        std::cout << gradmod::report_to_table(res);
}

int run_command(const std::string& cmd, const CliOptions& cli) {
    using namespace gradmod;
    if (cmd == "verify") {
        PipelineOptions opt;
        opt.start_cap = cli.cap;
        opt.max_cap = cli.max_cap;
        opt.seed = cli.seed;
        opt.p_override = cli.p;
        VerifyOutcome out = run_verify(opt);
        int failed = 0;
        for (const VerifyCheck& c : out.checks) {
            if (c.pass) {
                std::cout << "PASS  " << c.instance << ": " << c.what << " = " << c.got << "\n";
            } else {
                ++failed;
                std::cout << "FAIL  " << c.instance << ": " << c.what << " expected "
                          << c.expected << ", got " << c.got << "\n";
            }
        }
        std::cout << (failed ? "verify FAILED (" + std::to_string(failed) + " checks)"
                             : "verify passed (" + std::to_string(out.checks.size()) + " checks)")
                  << "\n";
        return failed ? kVerify : kOk;
    }

    InstanceFile inst = instance_from_file(cli.input);
    PipelineOptions opt = to_pipeline(cli, inst);
    if (cmd == "hilbert" || cmd == "hpoly" || cmd == "invariants") {
        opt.need_chain = false;
    } else if (cmd == "superficial" || cmd == "depth") {
        opt.with_rr = cmd == "depth";
        opt.with_delta = false;
        opt.with_classify = false;
    } else if (cmd == "rr") {
        opt.with_delta = false;
        opt.with_classify = false;
    } else if (cmd == "delta") {
        opt.with_rr = false;
        opt.with_classify = false;
    }
    // "classify" runs everything

    PipelineResult res = run_pipeline(inst, opt);
    emit(res, cli.format);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions, Ratliff-Rush filtrations and depth of associated graded "
                 "modules for MCM modules over hypersurface rings"};
    app.require_subcommand(1);

    CliOptions cli;
    std::string cmd;
    std::vector<std::string> names = {"hilbert", "hpoly",  "invariants", "superficial", "rr",
                                      "depth",   "delta",  "classify",   "verify"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        if (name != "verify")
            sub->add_option("input", cli.input, "instance JSON file")->required();
        sub->add_option("--cap", cli.cap, "starting truncation cap");
        sub->add_option("--max-cap", cli.max_cap, "largest cap the guard may reach");
        auto* s = sub->add_option("--seed", cli.seed, "random seed for superficial searches");
        sub->add_option("--window", cli.window, "Hilbert window (default cap-2)");
        sub->add_option("--p", cli.p, "prime field characteristic override");
        sub->add_option("--format", cli.format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
        sub->callback([&cli, &cmd, name, s] {
            cmd = name;
            cli.seed_given = s->count() > 0;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return run_command(cmd, cli);
    } catch (const gradmod::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const gradmod::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kComputation;
    }
}
