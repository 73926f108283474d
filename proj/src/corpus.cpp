#include "gradmod/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "gradmod/errors.hpp"

namespace gradmod {

namespace {

// The four worked examples share the hypersurface f = x^2 (x - y); the
// diagonal family lives over f = x^3. All are square, mu = 4 presentations
// except the cyclic baseline ringA.
const char* kRingA = R"json({
  "label": "ringA",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x-y)",
  "phi": [["x^2*(x-y)"]]
})json";

const char* kEx1 = R"json({
  "label": "ex1",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x-y)",
  "phi": [["x", "y", "z", "t"],
          ["x^2", "x^2", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kEx2 = R"json({
  "label": "ex2",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x-y)",
  "phi": [["x", "y", "z", "0"],
          ["x^2", "x^2", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kEx3 = R"json({
  "label": "ex3",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x-y)",
  "phi": [["x", "y", "0", "0"],
          ["x^2", "x^2", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kEx4 = R"json({
  "label": "ex4",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x-y)",
  "phi": [["x", "0", "0", "0"],
          ["0", "x^2", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kUlrich = R"json({
  "label": "diag_e4",
  "variables": ["x", "y", "z", "t"],
  "f": "x^3",
  "phi": [["x", "0", "0", "0"],
          ["0", "x", "0", "0"],
          ["0", "0", "x", "0"],
          ["0", "0", "0", "x"]]
})json";

const char* kDiagE5 = R"json({
  "label": "diag_e5",
  "variables": ["x", "y", "z", "t"],
  "f": "x^3",
  "phi": [["x", "0", "0", "0"],
          ["0", "x", "0", "0"],
          ["0", "0", "x", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kDiagE6 = R"json({
  "label": "diag_e6",
  "variables": ["x", "y", "z", "t"],
  "f": "x^3",
  "phi": [["x", "0", "0", "0"],
          ["0", "x", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kDiagE7 = R"json({
  "label": "diag_e7",
  "variables": ["x", "y", "z", "t"],
  "f": "x^3",
  "phi": [["x", "0", "0", "0"],
          ["0", "x^2", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kDiagE8 = R"json({
  "label": "diag_e8",
  "variables": ["x", "y", "z", "t"],
  "f": "x^3",
  "phi": [["x^2", "0", "0", "0"],
          ["0", "x^2", "0", "0"],
          ["0", "0", "x^2", "0"],
          ["0", "0", "0", "x^2"]]
})json";

const char* kFree4 = R"json({
  "label": "free4",
  "variables": ["x", "y", "z", "t"],
  "f": "x^3",
  "phi": [["x^3", "0", "0", "0"],
          ["0", "x^3", "0", "0"],
          ["0", "0", "x^3", "0"],
          ["0", "0", "0", "x^3"]]
})json";

const char* kPairE6 = R"json({
  "label": "pair_e6",
  "variables": ["x", "y", "z", "t"],
  "f": "x^2*(x-y)",
  "phi": [["x", "y", "0", "0"],
          ["x^2", "x^2", "0", "0"],
          ["0", "0", "x", "y"],
          ["0", "0", "x^2", "x^2"]]
})json";

}  // namespace

const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"diag_e4", kUlrich}, {"diag_e5", kDiagE5}, {"diag_e6", kDiagE6},
        {"diag_e7", kDiagE7}, {"diag_e8", kDiagE8}, {"ex1", kEx1},
        {"ex2", kEx2},        {"ex3", kEx3},        {"ex4", kEx4},
        {"free4", kFree4},    {"pair_e6", kPairE6}, {"ringA", kRingA},
    };
    return corpus;
}

InstanceFile corpus_instance(const std::string& label) {
    for (const CorpusEntry& e : bundled_corpus())
        if (label == e.label) return instance_from_json_text(e.json);
    throw ValidationError("unknown corpus instance '" + label + "'");
}

// ---------------------------------------------------------------------------
// pinned expectations

namespace {

constexpr long long kSkip = -999;

struct Expectation {
    const char* label;
    int mu, iM, order_f, dim, depth;
    std::vector<long long> h;
    std::vector<long long> e;
    std::vector<int> a_tuple;           // empty = skip
    const char* case_id;                // nullptr = expect no classification
    int free_rank;
    long long delta;                    // kSkip = skip
    std::vector<long long> gqs;         // {mu, alpha, beta}, empty = skip
    bool rr_zero;                       // r_M must be zero iff true (checked when dim >= 1)
    std::vector<long long> rr_r;        // exact r_M coefficients (empty + rr_zero=false = skip)
    std::vector<long long> rr_htilde;   // empty = skip
    std::vector<std::vector<long long>> h_chain;  // empty = skip
    long long b1_dim2;                  // b_1 of the witness on the dim-2 stage; kSkip = skip
    std::vector<long long> rho_dim1;    // leading rho values on the dim-1 stage; empty = skip
    std::vector<long long> htilde_dim1; // h~ of the dim-1 stage; empty = skip
    int det_order;                      // kSkip-like: -1 = skip
};

const std::vector<Expectation>& expectations() {
    static const std::vector<Expectation> table = {
        {"ringA", 1, 3, 3, 3, 3, {1, 1, 1}, {3, 3, 1, 0}, {3}, nullptr, 1, 0, {1, 1, 1}, true,
         {}, {1, 1, 1}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, kSkip, {}, {}, 3},
        {"ex1", 4, 1, 3, 3, 0, {4, 0, 6, -4, 1}, {7, 4, 0, 0}, {1, 2, 2, 2}, "e7.d", 0, 3,
         {4, 3, 3}, false, {1}, {3, 4},
         {{4, 0, 6, -4, 1}, {4, 1, 3, -1}, {4, 2, 1}, {4, 3}}, 1, {3, 1}, {3, 4}, 7},
        {"ex2", 4, 1, 3, 3, 1, {4, 1, 3, -1}, {7, 4, 0, -1}, {1, 2, 2, 2}, "e7.c", 0, 2,
         {4, 3, 2},
         true, {}, {4, 1, 3, -1}, {{4, 1, 3, -1}, {4, 1, 3, -1}, {4, 2, 1}, {4, 3}}, 1,
         {3, 1}, {3, 4}, 7},
        {"ex3", 4, 1, 3, 3, 2, {4, 2, 1}, {7, 4, 1, 0}, {1, 2, 2, 2}, "e7.b", 0, 1,
         {4, 3, 1},
         true, {}, {4, 2, 1}, {{4, 2, 1}, {4, 2, 1}, {4, 2, 1}, {4, 3}}, 0, {3, 1}, {3, 4},
         7},
        {"ex4", 4, 1, 3, 3, 3, {4, 3}, {7, 3, 0, 0}, {1, 2, 2, 2}, "e7.a", 0, 0,
         {4, 3, 0}, true,
         {}, {4, 3}, {{4, 3}, {4, 3}, {4, 3}, {4, 3}}, 0, {3}, {4, 3}, 7},
        {"diag_e4", 4, 1, 3, 3, 3, {4}, {4, 0, 0, 0}, {1, 1, 1, 1}, "e4", 0, 0, {4, 0, 0},
         true, {}, {4}, {{4}, {4}, {4}, {4}}, 0, {0}, {4}, 4},
        {"diag_e5", 4, 1, 3, 3, 3, {4, 1}, {5, 1, 0, 0}, {1, 1, 1, 2}, "e5.a", 0, 0,
         {4, 1, 0},
         true, {}, {4, 1}, {{4, 1}, {4, 1}, {4, 1}, {4, 1}}, 0, {1}, {4, 1}, 5},
        {"diag_e6", 4, 1, 3, 3, 3, {4, 2}, {6, 2, 0, 0}, {1, 1, 2, 2}, "e6.a", 0, 0,
         {4, 2, 0},
         true, {}, {4, 2}, {}, 0, {2}, {4, 2}, 6},
        {"diag_e7", 4, 1, 3, 3, 3, {4, 3}, {7, 3, 0, 0}, {1, 2, 2, 2}, "e7.a", 0, 0,
         {4, 3, 0},
         true, {}, {4, 3}, {}, 0, {3}, {4, 3}, 7},
        {"diag_e8", 4, 2, 3, 3, 3, {4, 4}, {8, 4, 0, 0}, {2, 2, 2, 2}, "e8", 0, 0, {4, 4, 0},
         true, {}, {4, 4}, {{4, 4}, {4, 4}, {4, 4}, {4, 4}}, 0, {4}, {4, 4}, 8},
        {"free4", 4, 3, 3, 3, 3, {4, 4, 4}, {12, 12, 4, 0}, {3, 3, 3, 3}, nullptr, 4, 0,
         {4, 4, 4}, true, {}, {4, 4, 4},
         {{4, 4, 4}, {4, 4, 4}, {4, 4, 4}, {4, 4, 4}}, kSkip, {}, {}, 12},
        {"pair_e6", 4, 1, 3, 3, 2, {4, 0, 2}, {6, 4, 2, 0}, {1, 1, 2, 2}, "e6.b'", 0, 2,
         {4, 2, 2}, true, {}, {4, 0, 2},
         {{4, 0, 2}, {4, 0, 2}, {4, 0, 2}, {4, 2}}, 0, {2, 2}, {2, 4}, 6},
    };
    return table;
}

template <class T>
std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

struct Checker {
    VerifyOutcome& out;
    std::string instance;

    void add(const std::string& what, const std::string& expected, const std::string& got) {
        VerifyCheck c{instance, what, expected, got, expected == got};
        if (!c.pass) out.all_pass = false;
        out.checks.push_back(std::move(c));
    }
    template <class T>
    void eq(const std::string& what, const T& expected, const T& got) {
        std::ostringstream e, g;
        e << expected;
        g << got;
        add(what, e.str(), g.str());
    }
};

IntPoly poly_of(const std::vector<long long>& v) { return IntPoly{std::vector<long long>(v)}; }

}  // namespace

VerifyOutcome run_verify(const PipelineOptions& base) {
    VerifyOutcome out;
    PipelineOptions opt = base;
    opt.with_exact_seq = true;

    for (const Expectation& ex : expectations()) {
        Checker ck{out, ex.label};
        PipelineResult res;
        try {
            res = run_pipeline(corpus_instance(ex.label), opt);
        } catch (const std::exception& e) {
            ck.add("pipeline", "completes", std::string("exception: ") + e.what());
            continue;
        }
        out.reports.push_back(res);

        ck.eq("mu", ex.mu, res.mu);
        ck.eq("i(M)", ex.iM, res.iM);
        ck.eq("order(f)", ex.order_f, res.order_f);
        ck.eq("dim", ex.dim, res.dim);
        if (ex.det_order >= 0) ck.eq("det_order", ex.det_order, res.det_order);
        ck.add("h", poly_of(ex.h).str(), res.hilbert.h.str());
        ck.eq("e_i", show(ex.e), show(res.hilbert.e));
        ck.eq("free_rank", ex.free_rank, res.free_rank);
        if (res.depth)
            ck.eq("depth", ex.depth, res.depth->depth);
        else
            ck.add("depth", std::to_string(ex.depth), "missing");
        if (!ex.a_tuple.empty() && res.a_tuple) ck.eq("a_tuple", show(ex.a_tuple), show(*res.a_tuple));
        if (ex.case_id) {
            if (res.classification)
                ck.add("case", ex.case_id, res.classification->case_id);
            else
                ck.add("case", ex.case_id, "missing");
        } else {
            ck.add("case", "none", res.classification ? res.classification->case_id : "none");
        }
        if (ex.delta != kSkip && res.delta) ck.eq("delta", ex.delta, res.delta->delta);
        if (!ex.gqs.empty() && res.gqs) {
            ck.eq("gqs", show(ex.gqs),
                  show(std::vector<long long>{res.gqs->mu, res.gqs->alpha, res.gqs->beta}));
        }
        if (res.dim >= 1 && res.rr) {
            if (ex.rr_zero)
                ck.eq("r_M = 0", true, res.rr->r_poly.is_zero());
            else if (!ex.rr_r.empty())
                ck.add("r_M", poly_of(ex.rr_r).str(), res.rr->r_poly.str());
            if (!ex.rr_htilde.empty())
                ck.add("h_tilde", poly_of(ex.rr_htilde).str(), res.rr->h_tilde.str());
        }
        if (!ex.h_chain.empty() && res.depth) {
            std::ostringstream e, g;
            for (const auto& h : ex.h_chain) e << poly_of(h).str() << " | ";
            for (const auto& h : res.depth->h_chain) g << h.str() << " | ";
            ck.add("h_chain", e.str(), g.str());
        }

        // stage-level values against the chain
        if (res.chain_data && res.dim >= 2) {
            const DepthComputation& dc = *res.chain_data;
            if (ex.b1_dim2 != kSkip) {
                int c = res.dim - 2;  // the dimension-2 stage
                const TruncModule& ms = *dc.stages[c];
                std::vector<long long> b =
                    b_vector(ms, dc.chain.witnesses[c].form, ms.cap() - 2);
                ck.eq("b_1 on the dim-2 stage", ex.b1_dim2, b.size() > 1 ? b[1] : 0);
            }
            if (!ex.rho_dim1.empty()) {
                int c = res.dim - 1;  // the dimension-1 stage
                const TruncModule& ms = *dc.stages[c];
                RhoVector rv = rho_vector(ms, dc.chain.witnesses[c].form);
                std::vector<long long> got(rv.rho.begin(),
                                           rv.rho.begin() + std::min(rv.rho.size(),
                                                                     ex.rho_dim1.size()));
                ck.eq("rho on the dim-1 stage", show(ex.rho_dim1), show(got));
            }
            if (!ex.htilde_dim1.empty()) {
                int c = res.dim - 1;
                RRReport rr1 = rr_filtration(*dc.stages[c]);
                ck.add("h_tilde on the dim-1 stage", poly_of(ex.htilde_dim1).str(),
                       rr1.h_tilde.str());
            }
        }

        // property suite: Singh + coefficient transfer on the first stage
        if (res.chain_data && res.dim >= 1) {
            const DepthComputation& dc = *res.chain_data;
            try {
                SinghReport sr = verify_singh(*dc.stages[0], dc.chain.witnesses[0].form);
                ck.eq("Singh equality", true, sr.ok);
                const int r = res.dim;
                std::vector<long long> eM = hilbert_coefficients(sr.h_m, r);
                std::vector<long long> eN = hilbert_coefficients(sr.h_n, r);
                bool transfer = true;
                for (int i = 0; i < r; ++i) transfer &= eM[i] == eN[i];
                long long bsum = sr.b_poly.eval_at_one();
                long long sign = r % 2 == 0 ? 1 : -1;
                transfer &= eM[r] == eN[r] - sign * bsum;
                ck.eq("e_i transfer", true, transfer);
                bool b0 = sr.b_poly.is_zero();
                ck.eq("b=0 iff h stable", true, b0 == (sr.h_m == sr.h_n));
            } catch (const std::exception& e) {
                ck.add("property suite", "passes", std::string("exception: ") + e.what());
            }
        }
    }
    return out;
}

}  // namespace gradmod
