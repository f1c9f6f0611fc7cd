#ifndef UNCLOGIC_SPACES_HPP
#define UNCLOGIC_SPACES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "unclogic/rat.hpp"

namespace unclogic {

class UncertaintySpace;
using SpacePtr = std::shared_ptr<const UncertaintySpace>;

// A finite uncertainty space: a carrier of labelled points together with an
// algebra of subsets. Every finite algebra is atomic, so the algebra is stored
// as a partition of the carrier into atoms; the measurable sets are exactly
// the unions of atoms, encoded as bitmasks over atom indices.
class UncertaintySpace {
public:
    UncertaintySpace(std::string name, std::vector<std::string> carrier,
                     std::vector<std::vector<int>> atoms);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& carrier() const { return carrier_; }
    int point_count() const { return static_cast<int>(carrier_.size()); }
    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const std::vector<int>& atom(int i) const { return atoms_[i]; }
    int atom_of_point(int point) const { return atom_of_point_[point]; }
    // -1 if the label is not a carrier point
    int point_index(const std::string& label) const;
    std::uint64_t full_mask() const;
    std::uint64_t member_count() const { return std::uint64_t{1} << atom_count(); }

    // Same carrier (labels, order) and same atom partition. Names may differ.
    bool same_algebra(const UncertaintySpace& other) const;

    std::string describe_mask(std::uint64_t mask) const;  // "{x,y}" over points

private:
    std::string name_;
    std::vector<std::string> carrier_;
    std::vector<std::vector<int>> atoms_;   // point indices, each block nonempty
    std::vector<int> atom_of_point_;
};

// A measurable set: a union of atoms of its space's algebra.
struct MeasurableSet {
    SpacePtr space;
    std::uint64_t mask = 0;

    bool empty() const { return mask == 0; }
    bool is_full() const { return mask == space->full_mask(); }
    bool contains_point(int point) const {
        return mask >> space->atom_of_point(point) & 1u;
    }
    std::vector<int> points() const;
    std::string to_string() const { return space->describe_mask(mask); }
};

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_algebra(const MeasurableSet& u, const MeasurableSet& v);

MeasurableSet set_complement(const MeasurableSet& u);
MeasurableSet set_union(const MeasurableSet& u, const MeasurableSet& v);
MeasurableSet set_intersection(const MeasurableSet& u, const MeasurableSet& v);
bool set_subset(const MeasurableSet& u, const MeasurableSet& v);

// The least algebra on `carrier` containing every generator, via membership
// signatures: two points share an atom iff they lie in exactly the same
// generators. Atom order follows first occurrence in carrier order.
SpacePtr generate_algebra(std::string name, std::vector<std::string> carrier,
                          const std::vector<std::vector<std::string>>& generators);

// Product space: carrier of pairs "(x,m)", atoms are products of atom pairs.
SpacePtr product_space(const SpacePtr& a, const SpacePtr& b);

// Coproduct space: tagged carrier "in1(x)" / "in2(y)", atoms are the tagged
// atoms of the summands, left block first.
SpacePtr coproduct_space(const SpacePtr& a, const SpacePtr& b);

// Measurable set of `space` from explicit point labels; throws DomainError if
// the labels do not form a union of atoms (or name unknown points).
MeasurableSet set_from_points(const SpacePtr& space, const std::vector<std::string>& labels);

// Point subset from labels without the union-of-atoms requirement; used for
// (possibly non-measurable) constant-sort formula literals.
std::vector<bool> point_set_from_labels(const SpacePtr& space,
                                        const std::vector<std::string>& labels);

}  // namespace unclogic

#endif
