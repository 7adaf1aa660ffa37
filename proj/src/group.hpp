#pragma once

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace gs {

using Element = int;

// Permutation of {1..n}, stored 0-based. Composition applies the right
// factor first: (a*b)(i) = a(b(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static Permutation from_one_line(const std::string& text, int n);
  static Permutation from_cycles(const std::string& text, int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  std::string to_one_line() const;  // space-separated, 1-based

  bool operator==(const Permutation& o) const { return image_ == o.image_; }
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

enum class GroupFamily { Cyclic, Symmetric };

// Finite group as dense tables. Element 0 is the identity; indices are
// stable for a fixed construction (S_n uses lexicographic one-line order,
// Z_n uses residues).
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> symmetric(int n);

  int order() const { return order_; }
  Element compose(Element a, Element b) const {
    check(a);
    check(b);
    return mult_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const {
    check(a);
    return inv_[a];
  }
  const std::string& label(Element a) const {
    check(a);
    return labels_[a];
  }

  GroupFamily family() const { return family_; }
  // n for sym:n / cyclic:n.
  int parameter() const { return parameter_; }
  const std::string& name() const { return name_; }

  // Symmetric-family conversions.
  Permutation permutation(Element a) const;
  Element element_of(const Permutation& p) const;

 private:
  FiniteGroup() = default;
  void check(Element a) const {
    if (a < 0 || a >= order_) fail(Errc::InvalidArg, "element index out of range for " + name_);
  }

  GroupFamily family_ = GroupFamily::Cyclic;
  int parameter_ = 0;
  int order_ = 0;
  std::string name_;
  std::vector<Element> mult_;  // row-major order_ x order_
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<Element> members;  // sorted, starts with 0
  std::string spec;              // text it was built from, for reporting

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Element x) const;
  // Position of x in members; -1 if absent.
  int member_index(Element x) const;
};

Subgroup subgroup_from_generators(const GroupPtr& g, const std::vector<Element>& gens);
// The copy of sym:k inside sym:n fixing points k+1..n.
Subgroup canonical_symmetric_subgroup(const GroupPtr& g, int k);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

enum class CosetKind { Left, Right, Double };

struct CosetTransversal {
  CosetKind kind;
  Subgroup subgroup;
  std::vector<Element> reps;     // ascending; identity's coset first
  std::vector<int> coset_of;     // element index -> position in reps

  int count() const { return static_cast<int>(reps.size()); }
};

CosetTransversal transversal(const GroupPtr& g, const Subgroup& h, CosetKind kind);

// Specifier grammar: "sym:<n>" or "cyclic:<n>".
GroupPtr parse_group_spec(const std::string& spec);
// "sym:<k>" (canonical embedding) or cycle-notation generators such as
// "(1 2)(3 4), (1 2 3)". For cyclic groups, a comma-separated residue list.
Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec);

}  // namespace gs
