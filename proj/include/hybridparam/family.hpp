#ifndef HYBRIDPARAM_FAMILY_HPP
#define HYBRIDPARAM_FAMILY_HPP

#include <string>

#include "hybridparam/graph.hpp"
#include "hybridparam/treewidth.hpp"

namespace hybridparam {

// Base family H. All three kinds are hereditary and closed under disjoint
// union, which is what the decomposition machinery relies on.
class FamilyPredicate {
public:
    enum class Kind { Edgeless, Forests, TreewidthAtMost };

    static FamilyPredicate edgeless() { return FamilyPredicate(Kind::Edgeless, 0); }
    static FamilyPredicate forests() { return FamilyPredicate(Kind::Forests, 0); }
    static FamilyPredicate treewidth_at_most(int w) {
        if (w < 0) throw input_error("treewidth bound must be nonnegative");
        return FamilyPredicate(Kind::TreewidthAtMost, w);
    }

    Kind kind() const { return kind_; }
    int width_bound() const { return w_; }

    Membership contains(const Graph& g) const {
        switch (kind_) {
            case Kind::Edgeless:
                return is_edgeless(g) ? Membership::Yes : Membership::No;
            case Kind::Forests:
                return is_forest(g) ? Membership::Yes : Membership::No;
            case Kind::TreewidthAtMost:
                return ::hybridparam::treewidth_at_most(g, w_);
        }
        return Membership::Unknown;
    }

    // Validators treat Unknown as a failure.
    bool contains_certain(const Graph& g) const { return contains(g) == Membership::Yes; }

    std::string name() const {
        switch (kind_) {
            case Kind::Edgeless: return "EDGELESS";
            case Kind::Forests: return "FORESTS";
            case Kind::TreewidthAtMost: return "TW " + std::to_string(w_);
        }
        return "?";
    }

private:
    FamilyPredicate(Kind k, int w) : kind_(k), w_(w) {}
    Kind kind_;
    int w_;
};

}  // namespace hybridparam

#endif
