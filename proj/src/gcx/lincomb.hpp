#ifndef GCX_LINCOMB_HPP
#define GCX_LINCOMB_HPP

#include "canon.hpp"

#include <map>

namespace gcx {

// Finite linear combination of graph classes, keyed by canonical encoding.
// Symmetry-forced zero classes are dropped on insertion.
struct LinComb {
    struct Term {
        Graph rep;
        Rat c;
    };
    std::map<std::string, Term> terms;

    void add(const Graph& g, const Rat& c, Parity p, Sym s) {
        if (c == 0) return;
        Canon cn = canonicalize(g, p, s);
        if (cn.zero) return;
        add_canonical(cn.key, cn.rep, c * cn.sign);
    }

    void add_canonical(const std::string& key, const Graph& rep, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, Term{rep, c});
        } else {
            it->second.c += c;
            if (it->second.c == 0) terms.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (auto& [k, t] : o.terms) add_canonical(k, t.rep, t.c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (auto& [k, t] : o.terms) add_canonical(k, t.rep, -t.c);
        return *this;
    }
    LinComb& operator*=(const Rat& r) {
        if (r == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, t] : terms) t.c *= r;
        return *this;
    }

    bool is_zero() const { return terms.empty(); }
    size_t size() const { return terms.size(); }
};

std::string lincomb_to_json(const LinComb& lc);

} // namespace gcx

#endif
