#pragma once

#include "mota1/bidegree.hpp"
#include "mota1/errors.hpp"

#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace mota1 {

struct Generator {
    std::string id;
    Bidegree deg;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Ordered finite list of named generators; presents the M2-free module
// ⊕_i M2·g_i.  Ids are unique within the basis.
class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<Generator> gens) : gens_(std::move(gens))
    {
        for (int i = 0; i < (int)gens_.size(); ++i) {
            auto [it, fresh] = index_.emplace(gens_[i].id, i);
            if (!fresh)
                throw ParseError("duplicate generator id '" + gens_[i].id + "'");
        }
    }

    int size() const { return (int)gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const Generator& gen(int i) const { return gens_[i]; }
    Bidegree degree(int i) const { return gens_[i].deg; }
    const std::string& id(int i) const { return gens_[i].id; }
    const std::vector<Generator>& generators() const { return gens_; }

    // -1 when absent.
    int index_of(const std::string& id) const
    {
        auto it = index_.find(id);
        return it == index_.end() ? -1 : it->second;
    }

    friend bool operator==(const GradedBasis& a, const GradedBasis& b)
    {
        return a.gens_ == b.gens_;
    }

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, int> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

inline BasisPtr make_basis(std::vector<Generator> gens)
{
    return std::make_shared<const GradedBasis>(std::move(gens));
}

inline bool same_basis(const BasisPtr& a, const BasisPtr& b)
{
    return a == b || (a && b && *a == *b);
}

}  // namespace mota1
