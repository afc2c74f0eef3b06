#ifndef SKEIN_FAMILIES_HPP
#define SKEIN_FAMILIES_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skein/coeff.hpp"
#include "skein/diagram.hpp"

namespace skein {

/// Parameters of the singular torus family: k singular vertices and l
/// classical crossings on two strands, at half-color n.
struct STParams {
  int k = 1;
  int l = 0;
  int n = 0;

  void validate() const {
    if (k < 1 || l < 0 || n < 0) fail(ErrorKind::InvalidArgument, "ST(k,l) needs k >= 1, l >= 0, n >= 0");
  }
};

/// R(n,i,k) = theta(2n,2n,2i)^{k-1} Delta_{2i} / theta(n,n,2i)^k.
inline RationalFn st_fusion_coeff(int n, int i, int k) {
  if (n < 0 || i < 0 || i > n || k < 1) fail(ErrorKind::InvalidArgument, "st_fusion_coeff needs 0 <= i <= n, k >= 1");
  return theta(2 * n, 2 * n, 2 * i).pow(k - 1) * delta_rf(2 * i) / theta(n, n, 2 * i).pow(k);
}

/// Sum over channels i of R(n,i,k) theta(2n,2n,2i) (lambda^{2i}_{2n,2n})^l;
/// this is [ST(k,l)]_{2n} before normalization.
inline RationalFn st_unnormalized(int k, int l, int n) {
  STParams{k, l, n}.validate();
  RationalFn sum;
  for (int i = 0; i <= n; ++i) {
    sum += st_fusion_coeff(n, i, k) * theta(2 * n, 2 * n, 2 * i) * RationalFn(lambda_coef(2 * i, 2 * n, 2 * n).pow(l));
  }
  return sum;
}

/// Normalized invariant of ST(k,l) at color 2n.
inline RationalFn st_invariant(int k, int l, int n) { return st_unnormalized(k, l, n) / delta_rf(2 * n); }

namespace detail {

/// Adds a four-valent node whose slots in the NW, SW, SE, NE positions are
/// returned. `flip` rotates the labels by one, which turns the over-strand
/// from NW-SE into SW-NE.
inline std::array<Port, 4> add_braid_node(SingularDiagram& d, NodeKind kind, bool flip) {
  const int id = static_cast<int>(d.nodes.size());
  d.nodes.push_back(DiagramNode{id, kind});
  const int r = flip ? 1 : 0;
  return {Port{id, r % 4}, Port{id, (1 + r) % 4}, Port{id, (2 + r) % 4}, Port{id, (3 + r) % 4}};
}

/// Builds braid closures left to right; each row of the braid is a strand.
class BraidBuilder {
 public:
  explicit BraidBuilder(int rows) : cur_(static_cast<std::size_t>(rows)), first_(static_cast<std::size_t>(rows)) {}

  /// A node between rows `top` and `top + 1`.
  void add(NodeKind kind, int top, bool flip) {
    if (top < 0 || top + 1 >= static_cast<int>(cur_.size())) fail(ErrorKind::InvalidArgument, "braid generator out of range");
    const auto p = add_braid_node(d_, kind, flip);
    attach(top, p[0]);
    attach(top + 1, p[1]);
    cur_[static_cast<std::size_t>(top)] = p[3];
    cur_[static_cast<std::size_t>(top) + 1] = p[2];
  }

  SingularDiagram close() {
    for (std::size_t r = 0; r < cur_.size(); ++r) {
      if (!cur_[r]) {
        ++d_.free_circles;
        continue;
      }
      connect(*cur_[r], *first_[r]);
    }
    validate_diagram(d_);
    return d_;
  }

 private:
  void attach(int row, const Port& p) {
    auto& c = cur_[static_cast<std::size_t>(row)];
    if (c) {
      connect(*c, p);
    } else {
      first_[static_cast<std::size_t>(row)] = p;
    }
  }
  void connect(const Port& a, const Port& b) {
    d_.edges.push_back(DiagramEdge{static_cast<int>(d_.edges.size()), {a, b}});
  }

  SingularDiagram d_;
  std::vector<std::optional<Port>> cur_;
  std::vector<std::optional<Port>> first_;
};

}  // namespace detail

/// Closure of a singular braid word such as "s1 s2' t1": sI crosses rows
/// I-1 and I, sI' with the other over-strand, tI places a singular vertex.
inline SingularDiagram braid_closure(int strands, const std::string& word) {
  if (strands < 1) fail(ErrorKind::InvalidArgument, "a braid needs at least one strand");
  detail::BraidBuilder b(strands);
  std::istringstream in(word);
  for (std::string tok; in >> tok;) {
    const bool inverse = tok.size() > 1 && tok.back() == '\'';
    const std::string digits = tok.substr(1, tok.size() - 1 - (inverse ? 1 : 0));
    if ((tok[0] != 's' && tok[0] != 't') || digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        (tok[0] == 't' && inverse)) {
      fail(ErrorKind::ParseError, "bad braid letter '" + tok + "'");
    }
    b.add(tok[0] == 's' ? NodeKind::Crossing : NodeKind::Singular, std::stoi(digits) - 1, inverse);
  }
  return b.close();
}

/// ST(k,l): k singular nodes then l crossings on a closed two-strand braid.
/// Nodes run left to right; node j's NE and SE slots meet node j+1's NW and
/// SW slots, cyclically.
inline SingularDiagram st_diagram(int k, int l) {
  STParams{k, l, 0}.validate();
  detail::BraidBuilder b(2);
  for (int j = 0; j < k; ++j) b.add(NodeKind::Singular, 0, false);
  for (int j = 0; j < l; ++j) b.add(NodeKind::Crossing, 0, false);
  return b.close();
}

}  // namespace skein

#endif  // SKEIN_FAMILIES_HPP
