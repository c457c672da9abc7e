#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "intspec/gf.hpp"

namespace intspec {

class GroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Elem = std::uint32_t;

enum class GroupKind { PSL2, AGL, Permutation };

// Class families of PSL(2, q), q odd, in character-table column order.
enum class ClassFamily {
  Identity,
  Unipotent1,     // c2(1)
  UnipotentDelta, // c2(Delta), Delta = -1 when q = 3 mod 4
  Split,          // c3(w^i)
  SplitSqrtM1,    // c3(sqrt(-1)), q = 1 mod 4
  Involution,     // [[0,-1],[1,0]], q = 3 mod 4
  Nonsplit,       // c4(e^j)
  Generic         // no family information
};

struct ConjClass {
  Elem rep = 0;
  std::uint64_t size = 0;
  std::uint32_t element_order = 1;
  std::uint32_t inverse_class = 0;
  ClassFamily family = ClassFamily::Generic;
  // Exponent i of w^i (Split) or j of e^j (Nonsplit); 0 otherwise.
  std::uint32_t param = 0;
  std::string tag;
};

/// A finite group given by an explicit indexed element list.
///
/// Elements are indices in [0, order()). Each element also has a word:
/// PSL2: (a, b, c, d) field codes with canonical sign; AGL: the n*n entries
/// of A row-major followed by b; Permutation: the image list.
/// Multiplication follows the matrix convention (g*h)(x) = g(h(x)).
class Group {
public:
  static std::shared_ptr<const Group> psl2(std::uint32_t q);
  static std::shared_ptr<const Group> agl(std::uint32_t n, std::uint32_t q);
  static std::shared_ptr<const Group> from_permutations(std::uint32_t degree,
                                                        const std::vector<std::vector<std::uint32_t>>& gens);

  GroupKind kind() const { return kind_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  const std::optional<Field>& field() const { return field_; }
  std::string spec() const;

  std::uint32_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const
  {
    if (!table_.empty()) return table_[std::size_t(a) * order_ + b];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, std::int64_t e) const;
  // x g x^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(x, g), inverse_[x]); }
  std::uint32_t element_order(Elem a) const { return orders_[a]; }

  std::vector<std::uint32_t> word(Elem a) const;
  std::optional<Elem> find(const std::vector<std::uint32_t>& word) const;
  Elem index_of(const std::vector<std::uint32_t>& word) const;
  std::string to_string(Elem a) const;

  const std::vector<Elem>& generators() const { return generators_; }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::uint32_t class_of(Elem a) const { return class_id_[a]; }
  // t with t * rep * t^-1 = a, where rep is the representative of a's class.
  Elem conjugator(Elem a) const { return conjugator_[a]; }
  const std::vector<Elem>& class_members(std::uint32_t c) const { return class_members_[c]; }
  std::uint64_t centralizer_order(std::uint32_t c) const { return order_ / classes_[c].size; }
  // Sorted centralizer of the representative of class c (cached).
  const std::vector<Elem>& centralizer(std::uint32_t c) const;
  std::vector<Elem> centralizer_of(Elem a) const;

  // PSL2 helpers (odd q): matrices by field codes, canonicalized.
  Elem matrix(Field::Code a, Field::Code b, Field::Code c, Field::Code d) const;
  // Generator of the norm-one torus as (a, b) with a^2 - Delta b^2 = 1.
  std::pair<Field::Code, Field::Code> norm_one_generator() const;
  Field::Code delta() const;
  // The image of e^j in PSL(2, q).
  Elem nonsplit_element(std::int64_t j) const;

private:
  Group() = default;
  void finish();
  void build_table();
  void compute_orders();
  void compute_generators();
  void compute_classes();
  void tag_psl2_classes();
  Elem mul_slow(Elem a, Elem b) const;
  std::vector<std::uint32_t> mul_words(const std::uint32_t* a, const std::uint32_t* b) const;
  std::vector<std::uint32_t> inverse_word(const std::uint32_t* a) const;
  void canonicalize(std::uint32_t* w) const;
  std::uint64_t key_of(const std::uint32_t* w) const;

  GroupKind kind_ = GroupKind::Permutation;
  std::uint32_t q_ = 0, n_ = 0, degree_ = 0;
  std::optional<Field> field_;
  std::uint32_t width_ = 0;
  std::uint32_t order_ = 0;
  Elem identity_ = 0;
  std::vector<std::uint32_t> words_; // order_ * width_
  bool dense_keys_ = false;
  std::vector<std::uint32_t> dense_index_;
  std::unordered_map<std::uint64_t, Elem> key_index_;
  std::map<std::vector<std::uint32_t>, Elem> word_index_; // fallback when keys overflow
  bool packed_keys_ = true;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_id_;
  std::vector<Elem> conjugator_;
  std::vector<std::vector<Elem>> class_members_;
  mutable std::mutex centralizer_mutex_;
  mutable std::map<std::uint32_t, std::vector<Elem>> centralizers_;
};

using GroupPtr = std::shared_ptr<const Group>;

std::uint64_t psl2_order(std::uint64_t q);
std::uint64_t agl_order(std::uint64_t n, std::uint64_t q);
std::uint64_t gl_order(std::uint64_t n, std::uint64_t q);

} // namespace intspec
