#include "gradmod/pipeline.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "gradmod/errors.hpp"

namespace gradmod {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <class T>
bool common_prefix_equal(const std::vector<T>& a, const std::vector<T>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

}  // namespace

bool PipelineResult::agrees(const PipelineResult& o) const {
    if (mu != o.mu || iM != o.iM || det_order != o.det_order || order_f != o.order_f ||
        dim != o.dim || free_rank != o.free_rank)
        return false;
    if (!(hilbert.h == o.hilbert.h) || hilbert.r != o.hilbert.r || hilbert.e != o.hilbert.e)
        return false;
    if (!common_prefix_equal(hilbert.H, o.hilbert.H)) return false;
    if (depth.has_value() != o.depth.has_value()) return false;
    if (depth && !depth->equivalent(*o.depth)) return false;
    if (rr.has_value() != o.rr.has_value()) return false;
    if (rr && !(rr->r_poly == o.rr->r_poly && rr->h_tilde == o.rr->h_tilde)) return false;
    if (delta.has_value() != o.delta.has_value()) return false;
    if (delta && delta->delta != o.delta->delta) return false;
    if (gqs.has_value() != o.gqs.has_value()) return false;
    if (gqs && (gqs->mu != o.gqs->mu || gqs->alpha != o.gqs->alpha || gqs->beta != o.gqs->beta))
        return false;
    if (a_tuple != o.a_tuple) return false;
    if (classification.has_value() != o.classification.has_value()) return false;
    if (classification && !(*classification == *o.classification)) return false;
    return true;
}

bool PipelineResult::operator==(const PipelineResult& o) const {
    return label == o.label && p == o.p && seed == o.seed && cap_used == o.cap_used &&
           mu == o.mu && iM == o.iM && det_order == o.det_order && order_f == o.order_f &&
           dim == o.dim && hilbert == o.hilbert && depth == o.depth && rr == o.rr &&
           delta == o.delta && gqs == o.gqs && a_tuple == o.a_tuple &&
           classification == o.classification && free_rank == o.free_rank &&
           timings_ms == o.timings_ms;
}

PipelineResult run_pipeline_at_cap(const InstanceFile& inst, int cap,
                                   const PipelineOptions& opt) {
    Stopwatch total;
    PipelineResult res;
    res.label = inst.label;
    res.seed = inst.seed.value_or(opt.seed);
    res.cap_used = cap;

    Presentation pres = instance_presentation(inst, cap, opt.p_override);
    res.p = pres.spec->p;
    const int d = pres.spec->v() - 1;

    {
        Stopwatch sw;
        FreeSplit split = split_free_summand(pres);
        res.free_rank = split.free_rank;
        res.timings_ms["free_split"] = sw.ms();
    }

    {
        Stopwatch sw;
        PresInvariants inv = presentation_invariants(pres);
        res.mu = inv.mu;
        res.iM = inv.iM;
        res.det_order = inv.det_order;
        res.order_f = inv.order_f;
        res.timings_ms["invariants"] = sw.ms();
    }

    {
        Stopwatch sw;
        TruncModule m0(pres);
        res.hilbert = hilbert_data(m0, opt.window >= 0 ? opt.window : -1);
        res.timings_ms["hilbert"] = sw.ms();
    }
    res.dim = res.hilbert.r;
    if (res.dim != d)
        throw ValidationError("instance '" + inst.label + "' is not maximal Cohen-Macaulay: dim " +
                              std::to_string(res.dim) + " != dim A = " + std::to_string(d));
    if (res.hilbert.e[0] < static_cast<long long>(res.mu) * res.iM)
        throw ComputationError("e(M) < mu(M) i(M) on instance '" + inst.label + "'");

    if (d == 0) {
        DepthReport rep;
        rep.depth = 0;
        rep.dim = 0;
        rep.h_chain = {res.hilbert.h};
        res.depth = rep;
        res.a_tuple = smith_orders(pres);
        if (opt.with_classify && res.mu == 4 && res.order_f == 3 && res.free_rank == 0) {
            // dimension zero: the table row fixes depth 0 = dim - 0 only for
            // the Cohen-Macaulay rows; deeper rows cannot occur here
            DepthComputation dc;
            dc.report = rep;
            dc.chain.stage_pres = {pres};
            dc.stages = {std::make_shared<TruncModule>(pres)};
            dc.stage_hilbert = {res.hilbert};
            res.classification = classify_from_chain(dc, *res.a_tuple);
        }
        res.timings_ms["total"] = total.ms();
        return res;
    }

    if (!opt.need_chain) {
        res.timings_ms["total"] = total.ms();
        return res;
    }

    Stopwatch sw_chain;
    auto dc = std::make_shared<DepthComputation>(
        depth_assoc_graded(pres, res.seed, opt.max_trials));
    res.depth = dc->report;
    res.chain_data = dc;
    res.timings_ms["depth_chain"] = sw_chain.ms();

    const TruncModule& m0 = *dc->stages[0];

    if (opt.with_rr) {
        Stopwatch sw;
        res.rr = rr_filtration(m0);
        bool positive_depth = dc->report.depth >= 1;
        if (positive_depth != res.rr->r_poly.is_zero())
            throw CapError("depth >= 1 must coincide with r_M = 0");
        res.timings_ms["ratliff_rush"] = sw.ms();
    }

    std::vector<TruncPoly> J;
    for (const auto& w : dc->chain.witnesses) J.push_back(lift_form(w.form, pres.spec));

    if (opt.with_delta) {
        Stopwatch sw;
        res.delta = delta_vv(m0, J, cap - 2);
        if (res.delta->delta <= 2 && dc->report.depth < d - res.delta->delta)
            throw CapError("Valabrega-Valla bound failed: depth < dim - delta");
        res.timings_ms["delta"] = sw.ms();
    }

    if (res.order_f == 3) {
        Stopwatch sw;
        res.gqs = graded_quotient_series(m0, J);
        res.timings_ms["graded_quotient"] = sw.ms();
    }

    if (opt.with_exact_seq) {
        Stopwatch sw;
        verify_exact_sequences(*dc);
        res.timings_ms["exact_sequences"] = sw.ms();
    }

    {
        Stopwatch sw;
        res.a_tuple = artinian_decompose(*dc);
        res.timings_ms["artinian"] = sw.ms();
    }

    if (opt.with_classify && res.mu == 4 && res.order_f == 3 && res.free_rank == 0)
        res.classification = classify_from_chain(*dc, *res.a_tuple);

    res.timings_ms["total"] = total.ms();
    return res;
}

PipelineResult run_pipeline(const InstanceFile& inst, const PipelineOptions& opt) {
    int cap = inst.cap.value_or(opt.start_cap);
    std::string last_issue;
    for (; cap + 1 <= opt.max_cap; ++cap) {
        try {
            PipelineResult r1 = run_pipeline_at_cap(inst, cap, opt);
            PipelineResult r2 = run_pipeline_at_cap(inst, cap + 1, opt);
            if (r1.agrees(r2)) return r1;
            last_issue = "results at caps " + std::to_string(cap) + " and " +
                         std::to_string(cap + 1) + " disagree";
        } catch (const CapError& e) {
            last_issue = e.what();
        }
    }
    throw ComputationError("instance '" + inst.label + "': guarded protocol exhausted caps <= " +
                           std::to_string(opt.max_cap) + " (" + last_issue + ")");
}

// ---------------------------------------------------------------------------
// serialization

namespace {

json poly_json(const IntPoly& p) { return json(p.c); }
IntPoly poly_from(const json& j) { return IntPoly{j.get<std::vector<long long>>()}; }

}  // namespace

std::string report_to_json_text(const PipelineResult& r) {
    json j;
    j["label"] = r.label;
    j["p"] = r.p;
    j["seed"] = r.seed;
    j["cap"] = r.cap_used;
    json inv;
    inv["mu"] = r.mu;
    inv["i"] = r.iM;
    inv["det_order"] = r.det_order;
    inv["order_f"] = r.order_f;
    inv["dim"] = r.dim;
    inv["h"] = poly_json(r.hilbert.h);
    inv["h_str"] = r.hilbert.h.str();
    inv["e"] = r.hilbert.e;
    inv["H"] = r.hilbert.H;
    inv["L"] = r.hilbert.L;
    j["invariants"] = inv;
    if (r.depth) {
        json d;
        d["depth"] = r.depth->depth;
        d["dim"] = r.depth->dim;
        json chain = json::array();
        for (const auto& h : r.depth->h_chain) chain.push_back(poly_json(h));
        d["h_chain"] = chain;
        d["witnesses"] = r.depth->witness_forms;
        d["b_first"] = r.depth->b_first;
        d["method_agreement"] = r.depth->method_agreement;
        d["trials"] = r.depth->trials_total;
        j["depth"] = d;
    }
    if (r.rr) {
        json rr;
        rr["r"] = poly_json(r.rr->r_poly);
        rr["h_tilde"] = poly_json(r.rr->h_tilde);
        rr["stabilized_at"] = r.rr->stabilized_at;
        rr["dims"] = r.rr->rr_dims;
        j["ratliff_rush"] = rr;
    }
    if (r.delta) {
        json d;
        d["delta"] = r.delta->delta;
        d["per_n"] = r.delta->per_n;
        j["delta"] = d;
    }
    if (r.gqs) {
        json g;
        g["mu"] = r.gqs->mu;
        g["alpha"] = r.gqs->alpha;
        g["beta"] = r.gqs->beta;
        j["graded_quotient"] = g;
    }
    if (r.a_tuple) j["a_tuple"] = *r.a_tuple;
    if (r.classification) {
        json c;
        c["a_tuple"] = r.classification->a_tuple;
        c["e"] = r.classification->eM;
        c["h"] = poly_json(r.classification->h);
        c["depth"] = r.classification->depth;
        c["dim"] = r.classification->dim;
        c["case"] = r.classification->case_id;
        c["theorem_ok"] = r.classification->theorem_ok;
        j["classification"] = c;
    }
    j["free_rank"] = r.free_rank;
    j["timings_ms"] = r.timings_ms;
    return j.dump(2);
}

PipelineResult report_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
    PipelineResult r;
    r.label = j.at("label").get<std::string>();
    r.p = j.at("p").get<uint32_t>();
    r.seed = j.at("seed").get<uint64_t>();
    r.cap_used = j.at("cap").get<int>();
    const json& inv = j.at("invariants");
    r.mu = inv.at("mu").get<int>();
    r.iM = inv.at("i").get<int>();
    r.det_order = inv.at("det_order").get<int>();
    r.order_f = inv.at("order_f").get<int>();
    r.dim = inv.at("dim").get<int>();
    r.hilbert.h = poly_from(inv.at("h"));
    r.hilbert.e = inv.at("e").get<std::vector<long long>>();
    r.hilbert.H = inv.at("H").get<std::vector<long long>>();
    r.hilbert.L = inv.at("L").get<std::vector<long long>>();
    r.hilbert.r = r.dim;
    r.hilbert.mu = r.hilbert.H.empty() ? 0 : r.hilbert.H[0];
    if (j.contains("depth")) {
        const json& d = j.at("depth");
        DepthReport rep;
        rep.depth = d.at("depth").get<int>();
        rep.dim = d.at("dim").get<int>();
        for (const auto& h : d.at("h_chain")) rep.h_chain.push_back(poly_from(h));
        rep.witness_forms = d.at("witnesses").get<std::vector<std::string>>();
        rep.b_first = d.at("b_first").get<std::vector<long long>>();
        rep.method_agreement = d.at("method_agreement").get<bool>();
        rep.trials_total = d.at("trials").get<int>();
        r.depth = rep;
    }
    if (j.contains("ratliff_rush")) {
        const json& rr = j.at("ratliff_rush");
        RRReport rep;
        rep.r_poly = poly_from(rr.at("r"));
        rep.h_tilde = poly_from(rr.at("h_tilde"));
        rep.stabilized_at = rr.at("stabilized_at").get<std::vector<int>>();
        rep.rr_dims = rr.at("dims").get<std::vector<long long>>();
        r.rr = rep;
    }
    if (j.contains("delta")) {
        DeltaReport rep;
        rep.delta = j.at("delta").at("delta").get<long long>();
        rep.per_n = j.at("delta").at("per_n").get<std::vector<long long>>();
        r.delta = rep;
    }
    if (j.contains("graded_quotient")) {
        GradedQuotientSeries g;
        g.mu = j.at("graded_quotient").at("mu").get<long long>();
        g.alpha = j.at("graded_quotient").at("alpha").get<long long>();
        g.beta = j.at("graded_quotient").at("beta").get<long long>();
        r.gqs = g;
    }
    if (j.contains("a_tuple")) r.a_tuple = j.at("a_tuple").get<std::vector<int>>();
    if (j.contains("classification")) {
        const json& c = j.at("classification");
        ClassificationRecord rec;
        rec.a_tuple = c.at("a_tuple").get<std::vector<int>>();
        rec.eM = c.at("e").get<long long>();
        rec.h = poly_from(c.at("h"));
        rec.depth = c.at("depth").get<int>();
        rec.dim = c.at("dim").get<int>();
        rec.case_id = c.at("case").get<std::string>();
        rec.theorem_ok = c.at("theorem_ok").get<bool>();
        r.classification = rec;
    }
    r.free_rank = j.at("free_rank").get<int>();
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
}

std::string report_to_table(const PipelineResult& r) {
    std::ostringstream os;
    os << "instance      " << r.label << "\n";
    os << "p / cap / seed  " << r.p << " / " << r.cap_used << " / " << r.seed << "\n";
    os << "mu(M)         " << r.mu << "\n";
    os << "i(M)          " << r.iM << "\n";
    os << "det order     " << r.det_order << "\n";
    os << "e(A)          " << r.order_f << "\n";
    os << "dim M         " << r.dim << "\n";
    os << "h(z)          " << r.hilbert.h.str() << "\n";
    os << "e_i           ";
    for (std::size_t i = 0; i < r.hilbert.e.size(); ++i)
        os << (i ? ", " : "") << "e" << i << "=" << r.hilbert.e[i];
    os << "\n";
    if (r.free_rank > 0) {
        os << "free summand  rank " << r.free_rank;
        if (r.free_rank < r.mu)
            os << "  (complement has mu = " << r.mu - r.free_rank
               << "; depth G(M) >= dim-2 by the splitting bound)";
        os << "\n";
    }
    if (r.depth) {
        os << "depth G(M)    " << r.depth->depth << "\n";
        os << "h-chain       ";
        for (std::size_t i = 0; i < r.depth->h_chain.size(); ++i)
            os << (i ? " | " : "") << r.depth->h_chain[i].str();
        os << "\n";
        if (!r.depth->witness_forms.empty()) {
            os << "witnesses     ";
            for (std::size_t i = 0; i < r.depth->witness_forms.size(); ++i)
                os << (i ? " ; " : "") << r.depth->witness_forms[i];
            os << "\n";
        }
    }
    if (r.rr)
        os << "r_M(z)        " << r.rr->r_poly.str() << "   h~(z) " << r.rr->h_tilde.str()
           << "\n";
    if (r.delta) os << "delta         " << r.delta->delta << "\n";
    if (r.gqs)
        os << "G/(J*) series " << r.gqs->mu << " + " << r.gqs->alpha << "z + " << r.gqs->beta
           << "z^2\n";
    if (r.a_tuple) {
        os << "a-tuple       (";
        for (std::size_t i = 0; i < r.a_tuple->size(); ++i)
            os << (i ? "," : "") << (*r.a_tuple)[i];
        os << ")\n";
    }
    if (r.classification)
        os << "case          " << r.classification->case_id << "  (depth >= dim-3: "
           << (r.classification->theorem_ok ? "yes" : "NO") << ")\n";
    double total = 0;
    auto it = r.timings_ms.find("total");
    if (it != r.timings_ms.end()) total = it->second;
    os << "time          " << total << " ms\n";
    return os.str();
}

}  // namespace gradmod
