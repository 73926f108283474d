#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradmod/module.hpp"

namespace gradmod {

// A problem instance as stored on disk: a hypersurface equation and a square
// presentation matrix, all entries as expression strings.
struct InstanceFile {
    std::string label;
    uint32_t p = 32003;
    std::vector<std::string> variables;
    std::string f;
    std::vector<std::vector<std::string>> phi;
    std::optional<int> cap;
    std::optional<uint64_t> seed;

    bool operator==(const InstanceFile& o) const {
        return label == o.label && p == o.p && variables == o.variables && f == o.f &&
               phi == o.phi && cap == o.cap && seed == o.seed;
    }
};

InstanceFile instance_from_json_text(const std::string& text);
InstanceFile instance_from_file(const std::string& path);
std::string instance_to_json_text(const InstanceFile& inst);

// Parse the instance into a presentation at the given cap. Validates: square
// matrix, expressions parse, order(f) >= 2, minimal presentation.
Presentation instance_presentation(const InstanceFile& inst, int cap, uint32_t p_override = 0);

}  // namespace gradmod
