#include "sally/hochster.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sally/parallel.hpp"

namespace sally {

namespace {

bool face_less(FaceMask a, FaceMask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

bool SquarefreeComplex::contains(FaceMask face) const {
  return std::binary_search(faces.begin(), faces.end(), face, face_less);
}

int SquarefreeComplex::dimension() const {
  if (faces.empty()) return -2;
  return std::popcount(faces.back()) - 1;
}

std::vector<FaceMask> SquarefreeComplex::faces_of_dimension(int dim) const {
  std::vector<FaceMask> out;
  for (FaceMask f : faces) {
    if (std::popcount(f) == dim + 1) out.push_back(f);
  }
  return out;
}

std::optional<std::size_t> SquarefreeComplex::cone_apex() const {
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    const FaceMask bit = FaceMask{1} << v;
    if (!contains(bit)) continue;
    const bool apex = std::all_of(faces.begin(), faces.end(),
                                  [&](FaceMask f) { return (f & bit) || contains(f | bit); });
    if (apex) return v;
  }
  return std::nullopt;
}

bool SquarefreeComplex::is_downward_closed() const {
  for (FaceMask f : faces) {
    for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
      if (!contains(f & ~(rest & -rest))) return false;
    }
  }
  return true;
}

SquarefreeComplex divisor_complex(const NumericalSemigroup& s, Integer lambda) {
  if (lambda < 0) throw Error(ErrorCode::ParamOutOfRange, "degree must be nonnegative");
  const auto& gens = s.generators();
  if (gens.size() > 63) throw Error(ErrorCode::ParamOutOfRange, "at most 63 generators supported");

  SquarefreeComplex c;
  c.vertex_labels = gens;
  if (!s.contains(lambda)) return c;

  // Depth-first over faces, extending only by larger vertex indices; every
  // face is reached once because the complex is downward closed.
  struct Frame {
    FaceMask face;
    Integer remainder;
    std::size_t next_vertex;
  };
  std::vector<Frame> stack{{0, lambda, 0}};
  while (!stack.empty()) {
    Frame top = stack.back();
    stack.pop_back();
    c.faces.push_back(top.face);
    for (std::size_t v = top.next_vertex; v < gens.size(); ++v) {
      const Integer rest = top.remainder - gens[v];
      if (s.contains(rest)) stack.push_back({top.face | (FaceMask{1} << v), rest, v + 1});
    }
  }
  std::sort(c.faces.begin(), c.faces.end(), face_less);
  return c;
}

linalg::IntMatrix boundary_matrix(const SquarefreeComplex& c, int dim) {
  const auto cols = c.faces_of_dimension(dim);
  const auto rows = c.faces_of_dimension(dim - 1);
  linalg::IntMatrix m = linalg::IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                                static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::int64_t sign = 1;
    for (FaceMask rest = cols[j]; rest != 0; rest &= rest - 1) {
      const FaceMask facet = cols[j] & ~(rest & -rest);
      const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      m(static_cast<Eigen::Index>(it - rows.begin()), static_cast<Eigen::Index>(j)) = sign;
      sign = -sign;
    }
  }
  return m;
}

std::vector<Integer> reduced_betti_by_ranks(const SquarefreeComplex& c) {
  if (c.is_void()) throw Error(ErrorCode::VoidComplex, "complex has no faces");
  const int top = c.dimension();
  const std::size_t length = std::max<std::size_t>(c.vertex_count(), 1);

  // boundary_rank[d + 1] = rank of C_d -> C_{d-1}; zero outside [0, top].
  std::vector<Integer> boundary_rank(static_cast<std::size_t>(top) + 3, 0);
  for (int d = 0; d <= top; ++d) {
    boundary_rank[static_cast<std::size_t>(d) + 1] = static_cast<Integer>(linalg::rank(boundary_matrix(c, d)));
  }
  std::vector<Integer> out(length, 0);
  for (int d = -1; d <= top && static_cast<std::size_t>(d + 1) < length; ++d) {
    const auto chains = static_cast<Integer>(c.faces_of_dimension(d).size());
    const auto idx = static_cast<std::size_t>(d + 1);
    out[idx] = chains - boundary_rank[idx] - boundary_rank[idx + 1];
  }
  return out;
}

std::vector<Integer> reduced_betti(const SquarefreeComplex& c) {
  if (c.is_void()) throw Error(ErrorCode::VoidComplex, "complex has no faces");
  if (c.cone_apex()) return std::vector<Integer>(std::max<std::size_t>(c.vertex_count(), 1), 0);
  return reduced_betti_by_ranks(c);
}

std::vector<Integer> graded_betti(const NumericalSemigroup& s, Integer lambda) {
  if (!s.contains(lambda)) return std::vector<Integer>(s.embedding_dimension(), 0);
  return reduced_betti(divisor_complex(s, lambda));
}

Integer BettiTable::at(std::size_t i, Integer lambda) const {
  const auto it = graded.find(lambda);
  if (it == graded.end() || i >= it->second.size()) return 0;
  return it->second[i];
}

Integer default_lambda_max(const NumericalSemigroup& s) {
  Integer sum = 0;
  for (Integer g : s.generators()) sum += g;
  return (s.is_whole_line() ? 0 : s.frobenius()) + sum;
}

BettiTable betti_table(const NumericalSemigroup& s, std::optional<Integer> lambda_max, unsigned jobs) {
  BettiTable table;
  table.lambda_max = lambda_max.value_or(default_lambda_max(s));
  if (table.lambda_max < 0) throw Error(ErrorCode::ParamOutOfRange, "lambda_max must be nonnegative");

  std::vector<Integer> degrees;
  for (Integer lambda = 0; lambda <= table.lambda_max; ++lambda) {
    if (s.contains(lambda)) degrees.push_back(lambda);
  }
  std::vector<std::vector<Integer>> columns(degrees.size());
  parallel_for(degrees.size(), jobs, [&](std::size_t k) { columns[k] = graded_betti(s, degrees[k]); });

  table.totals.assign(s.embedding_dimension(), 0);
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const auto& column = columns[k];
    if (std::all_of(column.begin(), column.end(), [](Integer v) { return v == 0; })) continue;
    for (std::size_t i = 0; i < column.size(); ++i) table.totals[i] += column[i];
    table.graded.emplace(degrees[k], column);
  }
  return table;
}

bool k_polynomial_identity_holds(const NumericalSemigroup& s, const BettiTable& table) {
  const Integer top = table.lambda_max;
  std::vector<Integer> series(static_cast<std::size_t>(top) + 1);
  for (Integer lambda = 0; lambda <= top; ++lambda) series[static_cast<std::size_t>(lambda)] = s.contains(lambda) ? 1 : 0;
  for (Integer g : s.generators()) {
    for (Integer lambda = top; lambda >= g; --lambda) {
      series[static_cast<std::size_t>(lambda)] -= series[static_cast<std::size_t>(lambda - g)];
    }
  }
  for (Integer lambda = 0; lambda <= top; ++lambda) {
    Integer alternating = 0;
    for (std::size_t i = 0; i < table.totals.size(); ++i) {
      alternating += (i % 2 == 0 ? 1 : -1) * table.at(i, lambda);
    }
    if (alternating != series[static_cast<std::size_t>(lambda)]) return false;
  }
  return true;
}

bool tail_window_vanishes(const NumericalSemigroup& s, const BettiTable& table, Integer window, unsigned jobs) {
  const auto count = static_cast<std::size_t>(std::max<Integer>(window, 0));
  std::vector<char> clean(count, 1);
  parallel_for(count, jobs, [&](std::size_t k) {
    const auto column = graded_betti(s, table.lambda_max + 1 + static_cast<Integer>(k));
    clean[k] = std::all_of(column.begin(), column.end(), [](Integer v) { return v == 0; });
  });
  return std::all_of(clean.begin(), clean.end(), [](char c) { return c != 0; });
}

}  // namespace sally
