#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "unicover/error.hpp"
#include "unicover/simplex.hpp"

namespace unicover {

/// A set of unimodular lattice tetrahedra, each tagged with the recursion
/// path that first produced it. Iteration order is canonical (sorted
/// vertex lists).
class Cover {
public:
    Cover() = default;
    explicit Cover(std::string target) : target_(std::move(target)) {}

    // Returns false if the simplex was already present.
    bool add(const Simplex3& s, std::string provenance, int depth = 0) {
        if (!is_unimodular(s))
            throw GuaranteeViolation("NonUnimodularPiece", "attempt to add a non-unimodular simplex to a cover",
                                     s.to_string() + " from " + provenance);
        max_depth_ = std::max(max_depth_, depth);
        return entries_.emplace(s, std::move(provenance)).second;
    }

    // Merges another cover whose simplices are first passed through `f`.
    template <class F>
    void merge(const Cover& other, F&& f, const std::string& prefix = "") {
        for (const auto& [s, prov] : other.entries_) entries_.emplace(f(s), prefix + prov);
        max_depth_ = std::max(max_depth_, other.max_depth_);
    }

    void merge(const Cover& other, const std::string& prefix = "") {
        merge(other, [](const Simplex3& s) { return s; }, prefix);
    }

    std::vector<Simplex3> simplices() const {
        std::vector<Simplex3> out;
        out.reserve(entries_.size());
        for (const auto& [s, prov] : entries_) out.push_back(s);
        return out;
    }

    const std::map<Simplex3, std::string>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int max_depth() const noexcept { return max_depth_; }
    const std::string& target() const noexcept { return target_; }
    void set_target(std::string t) { target_ = std::move(t); }

private:
    std::string target_;
    std::map<Simplex3, std::string> entries_;
    int max_depth_ = 0;
};

}  // namespace unicover
