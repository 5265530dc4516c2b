#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qlie/errors.hpp"

namespace qlie {

using GenIndex = std::uint32_t;

/// A named generator of positive degree. Parity is derived from the degree,
/// never stored separately.
struct Generator {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
    bool operator==(const Generator& o) const { return name == o.name && degree == o.degree; }
};

/// Ordered list of generators with distinct names. The creation order is
/// fixed and gives the canonical word order used everywhere downstream.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (GenIndex i = 0; i < gens_.size(); ++i) {
            if (gens_[i].degree < 1)
                throw PreconditionError("Alphabet: generator degree must be >= 1: " +
                                        gens_[i].name);
            if (!by_name_.emplace(gens_[i].name, i).second)
                throw PreconditionError("Alphabet: duplicate generator name: " + gens_[i].name);
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](GenIndex i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }

    GenIndex index_of(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw UnknownGeneratorError("unknown generator: " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return by_name_.count(name) != 0; }

    int min_degree() const {
        int m = 0;
        for (const Generator& g : gens_) m = (m == 0 || g.degree < m) ? g.degree : m;
        return m;
    }

  private:
    std::vector<Generator> gens_;
    std::map<std::string, GenIndex> by_name_;
};

/// Exponent vector over an alphabet: how often each generator occurs.
using Multidegree = std::vector<int>;

inline int multidegree_wordlength(const Multidegree& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

inline int multidegree_degree(const Alphabet& alph, const Multidegree& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * alph[static_cast<GenIndex>(i)].degree;
    return d;
}

/// Combined (degree, word length, multidegree) bookkeeping of a homogeneous
/// element.
struct Bigrade {
    int degree = 0;
    int wordlength = 0;
    Multidegree multidegree;
};

}  // namespace qlie
