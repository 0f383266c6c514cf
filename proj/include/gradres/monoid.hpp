#pragma once

// Grading monoids: (N,+), (N^d,+) with the componentwise order or no order,
// and finite multiplication tables with an optional declared strict order.
// Elements are coordinate vectors; a table element is a single index.

#include "gradres/field.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gradres {

using MonoidElt = std::vector<std::int64_t>;

enum class MonoidKind { natural, natural_power, table };
enum class PowerOrder { componentwise, none };

struct OrderViolation {
  std::string kind;  // "translation" | "e_not_least" | "order_not_strict"
  MonoidElt a, b, c;
};

struct OrderReport {
  bool is_ordered = false;
  bool e_is_least = false;
  bool well_founded = false;
  std::vector<OrderViolation> violations;
  bool all() const { return is_ordered && e_is_least && well_founded; }
};

class GradedMonoid {
 public:
  static GradedMonoid natural() {
    GradedMonoid g;
    g.kind_ = MonoidKind::natural;
    g.dim_ = 1;
    return g;
  }

  static GradedMonoid natural_power(std::size_t d, PowerOrder ord = PowerOrder::componentwise) {
    if (d == 0) throw input_error("natural_power: dimension must be positive");
    GradedMonoid g;
    g.kind_ = MonoidKind::natural_power;
    g.dim_ = d;
    g.porder_ = ord;
    return g;
  }

  static GradedMonoid table(std::vector<std::string> labels, std::size_t identity,
                            std::vector<std::vector<std::size_t>> mul,
                            std::set<std::pair<std::size_t, std::size_t>> order = {}) {
    GradedMonoid g;
    g.kind_ = MonoidKind::table;
    g.labels_ = std::move(labels);
    g.identity_idx_ = identity;
    g.mul_ = std::move(mul);
    g.order_ = std::move(order);
    g.check_table();
    return g;
  }

  MonoidKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  PowerOrder power_order() const { return porder_; }
  bool is_finite() const { return kind_ == MonoidKind::table; }
  std::size_t table_size() const { return labels_.size(); }

  MonoidElt identity() const {
    if (kind_ == MonoidKind::table) return {std::int64_t(identity_idx_)};
    return MonoidElt(dim_, 0);
  }

  bool is_identity(const MonoidElt& a) const { return a == identity(); }

  MonoidElt op(const MonoidElt& a, const MonoidElt& b) const {
    check_elt(a);
    check_elt(b);
    if (kind_ == MonoidKind::table) return {std::int64_t(mul_[a[0]][b[0]])};
    MonoidElt c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = a[i] + b[i];
    return c;
  }

  /// Declared strict order. Tables compare by membership in the order set;
  /// N and N^d (componentwise) by coordinates; order-free kinds never compare.
  bool lt(const MonoidElt& a, const MonoidElt& b) const {
    check_elt(a);
    check_elt(b);
    switch (kind_) {
      case MonoidKind::natural:
        return a[0] < b[0];
      case MonoidKind::natural_power: {
        if (porder_ == PowerOrder::none) return false;
        bool strict = false;
        for (std::size_t i = 0; i < dim_; ++i) {
          if (a[i] > b[i]) return false;
          if (a[i] < b[i]) strict = true;
        }
        return strict;
      }
      case MonoidKind::table:
        return order_.count({std::size_t(a[0]), std::size_t(b[0])}) > 0;
    }
    throw internal_error("lt: bad kind");
  }

  bool leq(const MonoidElt& a, const MonoidElt& b) const { return a == b || lt(a, b); }

  OrderReport validate() const {
    OrderReport rep;
    switch (kind_) {
      case MonoidKind::natural:
        rep.is_ordered = rep.e_is_least = rep.well_founded = true;
        return rep;
      case MonoidKind::natural_power:
        if (porder_ == PowerOrder::componentwise) {
          rep.is_ordered = rep.e_is_least = rep.well_founded = true;
        } else {
          // the empty order: translation and well-foundedness hold vacuously,
          // but e sits below nothing
          rep.is_ordered = rep.well_founded = true;
          rep.e_is_least = false;
          MonoidElt gamma(dim_, 0);
          gamma[0] = 1;
          rep.violations.push_back({"e_not_least", identity(), gamma, identity()});
        }
        return rep;
      case MonoidKind::table:
        return validate_table();
    }
    throw internal_error("validate: bad kind");
  }

  /// All α with α·β = γ (the degrees contributing to a shift in degree γ).
  std::vector<MonoidElt> left_divisors(const MonoidElt& gamma, const MonoidElt& beta) const {
    check_elt(gamma);
    check_elt(beta);
    std::vector<MonoidElt> out;
    if (kind_ == MonoidKind::table) {
      for (std::size_t i = 0; i < labels_.size(); ++i)
        if (mul_[i][beta[0]] == std::size_t(gamma[0])) out.push_back({std::int64_t(i)});
      return out;
    }
    MonoidElt a(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      a[i] = gamma[i] - beta[i];
      if (a[i] < 0) return out;
    }
    out.push_back(a);
    return out;
  }

  std::vector<MonoidElt> elements() const {
    if (kind_ != MonoidKind::table)
      throw capability_error("elements: monoid is infinite");
    std::vector<MonoidElt> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) out.push_back({std::int64_t(i)});
    return out;
  }

  std::string to_string(const MonoidElt& a) const {
    check_elt(a);
    if (kind_ == MonoidKind::table) return labels_[a[0]];
    if (dim_ == 1) return std::to_string(a[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }

  /// Deterministic total order refining lt for N and N^d (degree-sum, then
  /// lex); tables fall back to index order. Used to pick generators in a
  /// stable smallest-degree-first fashion.
  bool key_less(const MonoidElt& a, const MonoidElt& b) const {
    if (kind_ == MonoidKind::table) return a[0] < b[0];
    std::int64_t sa = 0, sb = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      sa += a[i];
      sb += b[i];
    }
    if (sa != sb) return sa < sb;
    return a < b;
  }

  bool is_commutative() const {
    if (kind_ != MonoidKind::table) return true;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (mul_[i][j] != mul_[j][i]) return false;
    return true;
  }

  bool operator==(const GradedMonoid& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_ && porder_ == o.porder_ &&
           labels_ == o.labels_ && identity_idx_ == o.identity_idx_ && mul_ == o.mul_ &&
           order_ == o.order_;
  }

 private:
  void check_elt(const MonoidElt& a) const {
    if (kind_ == MonoidKind::table) {
      if (a.size() != 1 || a[0] < 0 || std::size_t(a[0]) >= labels_.size())
        throw input_error("monoid element out of range");
      return;
    }
    if (a.size() != dim_) throw input_error("monoid element has wrong arity");
    for (auto x : a)
      if (x < 0) throw input_error("monoid element has negative coordinate");
  }

  void check_table() const {
    const std::size_t n = labels_.size();
    if (n == 0) throw input_error("table monoid: empty element list");
    if (identity_idx_ >= n) throw input_error("table monoid: identity index out of range");
    if (mul_.size() != n) throw input_error("table monoid: mul table has wrong shape");
    for (const auto& row : mul_) {
      if (row.size() != n) throw input_error("table monoid: mul table has wrong shape");
      for (auto v : row)
        if (v >= n) throw input_error("table monoid: mul entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
      if (mul_[identity_idx_][i] != i || mul_[i][identity_idx_] != i)
        throw input_error("table monoid: identity law fails");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (mul_[mul_[i][j]][k] != mul_[i][mul_[j][k]])
            throw input_error("table monoid: multiplication is not associative");
    for (auto& [a, b] : order_)
      if (a >= n || b >= n) throw input_error("table monoid: order pair out of range");
  }

  OrderReport validate_table() const {
    OrderReport rep;
    const std::size_t n = labels_.size();
    auto elt = [](std::size_t i) { return MonoidElt{std::int64_t(i)}; };

    rep.well_founded = true;  // a finite strict partial order is well-founded
    for (std::size_t a = 0; a < n; ++a)
      if (order_.count({a, a})) {
        rep.well_founded = false;
        rep.violations.push_back({"order_not_strict", elt(a), elt(a), elt(a)});
      }
    for (auto& [a, b] : order_)
      for (std::size_t c = 0; c < n; ++c)
        if (order_.count({b, c}) && !order_.count({a, c})) {
          rep.well_founded = false;
          rep.violations.push_back({"order_not_strict", elt(a), elt(b), elt(c)});
        }

    rep.is_ordered = true;
    for (auto& [a, b] : order_)
      for (std::size_t c = 0; c < n; ++c) {
        if (!order_.count({mul_[a][c], mul_[b][c]})) {
          rep.is_ordered = false;
          rep.violations.push_back({"translation", elt(a), elt(b), elt(c)});
        }
        if (!order_.count({mul_[c][a], mul_[c][b]})) {
          rep.is_ordered = false;
          rep.violations.push_back({"translation", elt(a), elt(b), elt(c)});
        }
      }

    rep.e_is_least = true;
    for (std::size_t a = 0; a < n; ++a)
      if (a != identity_idx_ && !order_.count({identity_idx_, a})) {
        rep.e_is_least = false;
        rep.violations.push_back({"e_not_least", elt(identity_idx_), elt(a), elt(a)});
      }
    return rep;
  }

  MonoidKind kind_ = MonoidKind::natural;
  std::size_t dim_ = 1;
  PowerOrder porder_ = PowerOrder::componentwise;
  std::vector<std::string> labels_;
  std::size_t identity_idx_ = 0;
  std::vector<std::vector<std::size_t>> mul_;
  std::set<std::pair<std::size_t, std::size_t>> order_;
};

}  // namespace gradres
