#include "lincomb.hpp"

#include "json.hpp"

namespace gcx {

std::string lincomb_to_json(const LinComb& lc) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto& [key, t] : lc.terms) {
        std::string val = numerator(t.c).str();
        if (denominator(t.c) != 1) val += "/" + denominator(t.c).str();
        j[key] = val;
    }
    return j.dump();
}

} // namespace gcx
