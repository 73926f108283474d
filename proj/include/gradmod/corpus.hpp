#pragma once

#include <string>
#include <vector>

#include "gradmod/pipeline.hpp"

namespace gradmod {

struct CorpusEntry {
    const char* label;
    const char* json;
};

// the instances bundled into the binary, ordered by label
const std::vector<CorpusEntry>& bundled_corpus();

InstanceFile corpus_instance(const std::string& label);

struct VerifyCheck {
    std::string instance;
    std::string what;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct VerifyOutcome {
    std::vector<VerifyCheck> checks;
    std::vector<PipelineResult> reports;
    bool all_pass = true;
};

// Run the bundled corpus and assert every pinned expectation plus the
// property suites; deterministic for a fixed seed.
VerifyOutcome run_verify(const PipelineOptions& base);

}  // namespace gradmod
