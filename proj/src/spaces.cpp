#include "unclogic/spaces.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace unclogic {

UncertaintySpace::UncertaintySpace(std::string name, std::vector<std::string> carrier,
                                   std::vector<std::vector<int>> atoms)
    : name_(std::move(name)), carrier_(std::move(carrier)), atoms_(std::move(atoms)) {
    std::unordered_set<std::string> seen;
    for (const auto& label : carrier_)
        if (!seen.insert(label).second)
            throw DomainError("malformed space '" + name_ + "': duplicate point label '" + label + "'");
    if (atoms_.size() > 64)
        throw DomainError("space '" + name_ + "' has " + std::to_string(atoms_.size()) +
                          " atoms; at most 64 are supported");
    atom_of_point_.assign(carrier_.size(), -1);
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (atoms_[a].empty())
            throw DomainError("malformed space '" + name_ + "': empty atom");
        for (int p : atoms_[a]) {
            if (p < 0 || p >= point_count() || atom_of_point_[p] != -1)
                throw DomainError("malformed space '" + name_ + "': atoms do not partition the carrier");
            atom_of_point_[p] = static_cast<int>(a);
        }
    }
    for (int p = 0; p < point_count(); ++p)
        if (atom_of_point_[p] == -1)
            throw DomainError("malformed space '" + name_ + "': point '" + carrier_[p] +
                              "' not covered by any atom");
}

int UncertaintySpace::point_index(const std::string& label) const {
    for (int i = 0; i < point_count(); ++i)
        if (carrier_[i] == label) return i;
    return -1;
}

std::uint64_t UncertaintySpace::full_mask() const {
    int n = atom_count();
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool UncertaintySpace::same_algebra(const UncertaintySpace& other) const {
    return carrier_ == other.carrier_ && atoms_ == other.atoms_;
}

std::string UncertaintySpace::describe_mask(std::uint64_t mask) const {
    std::vector<int> pts;
    for (int p = 0; p < point_count(); ++p)
        if (mask >> atom_of_point_[p] & 1u) pts.push_back(p);
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ",";
        out += carrier_[pts[i]];
    }
    return out + "}";
}

std::vector<int> MeasurableSet::points() const {
    std::vector<int> pts;
    for (int p = 0; p < space->point_count(); ++p)
        if (contains_point(p)) pts.push_back(p);
    return pts;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_algebra(*b);
}

void require_same_algebra(const MeasurableSet& u, const MeasurableSet& v) {
    if (!same_space(u.space, v.space))
        throw SortError("set operation across different algebras ('" + u.space->name() +
                        "' vs '" + v.space->name() + "')");
}

MeasurableSet set_complement(const MeasurableSet& u) {
    return {u.space, u.space->full_mask() & ~u.mask};
}

MeasurableSet set_union(const MeasurableSet& u, const MeasurableSet& v) {
    require_same_algebra(u, v);
    return {u.space, u.mask | v.mask};
}

MeasurableSet set_intersection(const MeasurableSet& u, const MeasurableSet& v) {
    require_same_algebra(u, v);
    return {u.space, u.mask & v.mask};
}

bool set_subset(const MeasurableSet& u, const MeasurableSet& v) {
    require_same_algebra(u, v);
    return (u.mask & ~v.mask) == 0;
}

SpacePtr generate_algebra(std::string name, std::vector<std::string> carrier,
                          const std::vector<std::vector<std::string>>& generators) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (!index.emplace(carrier[i], static_cast<int>(i)).second)
            throw DomainError("malformed space '" + name + "': duplicate point label '" +
                              carrier[i] + "'");
    }
    // membership signature of each point across the generators
    std::vector<std::vector<bool>> sig(carrier.size(), std::vector<bool>(generators.size(), false));
    for (std::size_t g = 0; g < generators.size(); ++g) {
        for (const auto& label : generators[g]) {
            auto it = index.find(label);
            if (it == index.end())
                throw DomainError("generator of space '" + name + "' names unknown point '" +
                                  label + "'");
            sig[it->second][g] = true;
        }
    }
    std::vector<std::vector<int>> atoms;
    std::map<std::vector<bool>, int> block_of_sig;
    for (std::size_t p = 0; p < carrier.size(); ++p) {
        auto it = block_of_sig.find(sig[p]);
        if (it == block_of_sig.end()) {
            block_of_sig.emplace(sig[p], static_cast<int>(atoms.size()));
            atoms.push_back({static_cast<int>(p)});
        } else {
            atoms[it->second].push_back(static_cast<int>(p));
        }
    }
    return std::make_shared<UncertaintySpace>(std::move(name), std::move(carrier), std::move(atoms));
}

SpacePtr product_space(const SpacePtr& a, const SpacePtr& b) {
    std::vector<std::string> carrier;
    carrier.reserve(static_cast<std::size_t>(a->point_count()) * b->point_count());
    for (int i = 0; i < a->point_count(); ++i)
        for (int j = 0; j < b->point_count(); ++j)
            carrier.push_back("(" + a->carrier()[i] + "," + b->carrier()[j] + ")");
    std::vector<std::vector<int>> atoms;
    for (int ai = 0; ai < a->atom_count(); ++ai) {
        for (int bj = 0; bj < b->atom_count(); ++bj) {
            std::vector<int> block;
            for (int i : a->atom(ai))
                for (int j : b->atom(bj)) block.push_back(i * b->point_count() + j);
            std::sort(block.begin(), block.end());
            atoms.push_back(std::move(block));
        }
    }
    return std::make_shared<UncertaintySpace>("(" + a->name() + "*" + b->name() + ")",
                                              std::move(carrier), std::move(atoms));
}

SpacePtr coproduct_space(const SpacePtr& a, const SpacePtr& b) {
    std::vector<std::string> carrier;
    for (const auto& label : a->carrier()) carrier.push_back("in1(" + label + ")");
    for (const auto& label : b->carrier()) carrier.push_back("in2(" + label + ")");
    std::vector<std::vector<int>> atoms;
    for (int ai = 0; ai < a->atom_count(); ++ai) atoms.push_back(a->atom(ai));
    int offset = a->point_count();
    for (int bj = 0; bj < b->atom_count(); ++bj) {
        std::vector<int> block;
        for (int p : b->atom(bj)) block.push_back(p + offset);
        atoms.push_back(std::move(block));
    }
    return std::make_shared<UncertaintySpace>("(" + a->name() + "+" + b->name() + ")",
                                              std::move(carrier), std::move(atoms));
}

MeasurableSet set_from_points(const SpacePtr& space, const std::vector<std::string>& labels) {
    std::vector<bool> in = point_set_from_labels(space, labels);
    std::uint64_t mask = 0;
    for (int p = 0; p < space->point_count(); ++p)
        if (in[p]) mask |= std::uint64_t{1} << space->atom_of_point(p);
    // the selected points must be exactly the union of the touched atoms
    for (int p = 0; p < space->point_count(); ++p) {
        if (!in[p] && (mask >> space->atom_of_point(p) & 1u))
            throw DomainError("point set is not measurable in space '" + space->name() +
                              "': atom containing '" + space->carrier()[p] + "' is split");
    }
    return {space, mask};
}

std::vector<bool> point_set_from_labels(const SpacePtr& space,
                                        const std::vector<std::string>& labels) {
    std::vector<bool> in(space->point_count(), false);
    for (const auto& label : labels) {
        int p = space->point_index(label);
        if (p < 0)
            throw DomainError("unknown point '" + label + "' in space '" + space->name() + "'");
        in[p] = true;
    }
    return in;
}

}  // namespace unclogic
