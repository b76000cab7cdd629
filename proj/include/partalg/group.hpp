#pragma once

// Concrete finite groups as Cayley tables, their conjugacy classes and power maps,
// and the subgroup machinery (Sylow subgroups, normalizers) used by the McKay checker.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "partalg/exact.hpp"

namespace partalg {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBound = 20000;

/// Multiplication table of a finite group. Element 0 is the identity.
class FiniteGroup {
public:
    /// Validates the Latin-square, identity, inverse and associativity conditions.
    FiniteGroup(std::size_t order, std::vector<Elem> table, std::string origin);

    std::size_t order() const { return order_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem identity() const { return 0; }
    unsigned element_order(Elem a) const { return elem_order_[a]; }
    Elem power(Elem a, long long k) const;
    const std::string& origin() const { return origin_; }
    const std::vector<Elem>& table() const { return table_; }
    /// 1-based Cayley-table text (the file format accepted by load_group).
    std::string to_table_text() const;

private:
    std::size_t order_;
    std::vector<Elem> table_;
    std::vector<Elem> inv_;
    std::vector<unsigned> elem_order_;
    std::string origin_;
};

struct ClassData {
    std::size_t n_classes = 0;
    std::vector<std::size_t> class_of;            // element -> class
    std::vector<Elem> reps;                       // class -> representative
    std::vector<std::size_t> sizes;               // class -> size
    std::vector<std::vector<Elem>> members;       // class -> sorted elements
    std::vector<std::size_t> inverse_class;       // i -> i'
    std::vector<unsigned> rep_order;              // class -> element order
    unsigned exponent = 1;
    std::vector<std::vector<std::size_t>> power;  // power[i][t mod exponent]

    std::size_t power_class(std::size_t i, long long t) const;
};

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<Elem> members;  // sorted, members[0] == identity

    std::size_t order() const { return members.size(); }
    bool contains(Elem x) const;
};

/// Where a group comes from: `builtin:<spec>`, `table:<path>`, `perm:<path>`.
struct GroupSource {
    enum class Kind { Builtin, TableFile, PermFile, TableText, PermText };
    Kind kind = Kind::Builtin;
    std::string value;
    std::size_t order_bound = kDefaultOrderBound;
};

FiniteGroup load_group(const GroupSource& src);
FiniteGroup builtin_group(const std::string& spec, std::size_t order_bound = kDefaultOrderBound);
FiniteGroup group_from_table_text(const std::string& text, const std::string& origin,
                                  std::size_t order_bound = kDefaultOrderBound);
FiniteGroup group_from_permutation_text(const std::string& text, const std::string& origin,
                                        std::size_t order_bound = kDefaultOrderBound);

ClassData conjugacy_classes(const FiniteGroup& g);
unsigned exponent(const FiniteGroup& g);

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);
Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p, std::uint64_t seed = 0);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
/// The members of s as a group in their own right (re-indexed in sorted order).
FiniteGroup induced_group(const FiniteGroup& g, const Subgroup& s);

std::vector<unsigned> prime_divisors(std::size_t n);

}  // namespace partalg
