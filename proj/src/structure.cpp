#include "galstab/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace galstab {

namespace {

const std::vector<CycMatrix>& character_source(const FiniteMatrixGroup& p) {
  return p.generators().empty() ? p.elements() : p.generators();
}

std::vector<CycElement> diagonal_values(const std::vector<CycMatrix>& gens, std::size_t coord) {
  std::vector<CycElement> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g(coord, coord));
  return out;
}

}  // namespace

std::vector<std::size_t> StrongDiagonalForm::block_sizes() const {
  std::vector<std::size_t> sizes;
  for (std::size_t t = 0; t + 1 < block_bounds.size(); ++t) sizes.push_back(block_bounds[t + 1] - block_bounds[t]);
  return sizes;
}

std::size_t StrongDiagonalForm::block_of(std::size_t coord) const {
  for (std::size_t t = 0; t + 1 < block_bounds.size(); ++t)
    if (coord < block_bounds[t + 1]) return t;
  throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
}

bool StrongDiagonalForm::is_identity_permutation() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

CycMatrix StrongDiagonalForm::reordering_matrix(const CyclotomicField& field) const {
  // S e_{perm[new]} = e_new
  std::vector<std::size_t> target(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) target[perm[k]] = k;
  return CycMatrix::permutation(field, target);
}

StrongDiagonalForm strongly_diagonal_form(const FiniteMatrixGroup& p) {
  for (const auto& g : p.elements())
    if (!g.is_diagonal()) throw Error(ErrorKind::NotDiagonal, g.to_string());
  const auto& gens = character_source(p);
  const std::size_t n = p.dim();

  std::vector<std::vector<CycElement>> classes;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    auto chi = diagonal_values(gens, i);
    auto it = std::find(classes.begin(), classes.end(), chi);
    if (it == classes.end()) {
      classes.push_back(std::move(chi));
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it - classes.begin())].push_back(i);
    }
  }
  StrongDiagonalForm sdf;
  sdf.block_bounds.push_back(0);
  for (const auto& mem : members) {
    sdf.perm.insert(sdf.perm.end(), mem.begin(), mem.end());
    sdf.block_bounds.push_back(sdf.perm.size());
  }
  sdf.characters = std::move(classes);
  return sdf;
}

bool is_block_diagonal(const CycMatrix& a, const StrongDiagonalForm& sdf) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (sdf.block_of(i) != sdf.block_of(j) && !a(i, j).is_zero()) return false;
  return true;
}

bool is_block_scalar(const CycMatrix& a, const StrongDiagonalForm& sdf) {
  if (!a.is_diagonal()) return false;
  for (std::size_t i = 1; i < a.dim(); ++i)
    if (sdf.block_of(i) == sdf.block_of(i - 1) && !(a(i, i) == a(i - 1, i - 1))) return false;
  return true;
}

PermutationImage sigma(const CycMatrix& n, const FiniteMatrixGroup& p) {
  const StrongDiagonalForm sdf = strongly_diagonal_form(p);
  if (!sdf.is_identity_permutation())
    throw Error(ErrorKind::NotDiagonal, "group is not in strongly diagonal form");
  const CycMatrix n_inv = n.inverse();
  const auto& gens = character_source(p);
  std::vector<CycMatrix> pulled;  // phi(g) = N^-1 g N
  for (const auto& g : gens) {
    if (!p.contains(n * g * n_inv)) throw Error(ErrorKind::NotNormalizing, n.to_string());
    CycMatrix back = n_inv * g * n;
    if (!p.contains(back)) throw Error(ErrorKind::NotNormalizing, n.to_string());
    pulled.push_back(std::move(back));
  }
  const std::size_t dim = p.dim();
  std::vector<std::size_t> next(sdf.block_count(), 0);
  std::vector<std::size_t> perm(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto chi = diagonal_values(pulled, j);
    auto it = std::find(sdf.characters.begin(), sdf.characters.end(), chi);
    if (it == sdf.characters.end()) throw Error(ErrorKind::NotNormalizing, "character not permuted");
    const auto t = static_cast<std::size_t>(it - sdf.characters.begin());
    perm[j] = sdf.block_bounds[t] + next[t]++;
    if (perm[j] >= sdf.block_bounds[t + 1]) throw Error(ErrorKind::NotNormalizing, "block sizes not preserved");
  }
  return PermutationImage{perm, CycMatrix::permutation(p.field(), perm)};
}

CycMatrix rho_apply(const CycMatrix& a_in, const StrongDiagonalForm& sdf) {
  const std::size_t n = a_in.dim();
  if (n != sdf.dim()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  CycMatrix a = a_in;
  if (!sdf.is_identity_permutation()) {
    const CycMatrix s = sdf.reordering_matrix(a.field());
    a = s * a * s.inverse();
  }
  const CycMatrix a_inv = a.inverse();

  std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t t = 0; t < sdf.block_count(); ++t)
    for (std::size_t r = sdf.block_bounds[t]; r < sdf.block_bounds[t + 1]; ++r)
      for (std::size_t c = sdf.block_bounds[t]; c < sdf.block_bounds[t + 1]; ++c) {
        index[r][c] = static_cast<long>(basis.size());
        basis.emplace_back(r, c);
      }

  CycMatrix out(a.field(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto [r, c] = basis[col];
    // a E_rc a^-1 has (i, j) entry a(i, r) a^-1(c, j)
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, r).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (a_inv(c, j).is_zero()) continue;
        if (index[i][j] < 0) throw Error(ErrorKind::NotNormalizing, "conjugation leaves the block-diagonal algebra");
        out(static_cast<std::size_t>(index[i][j]), col) = a(i, r) * a_inv(c, j);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ATypeDecomposition ATypeDecomposition::coordinate(const std::vector<std::vector<std::size_t>>& partition,
                                                  std::size_t n) {
  ATypeDecomposition d;
  for (const auto& block : partition) {
    IntMatrix m(block.size(), n);
    for (std::size_t r = 0; r < block.size(); ++r) m(r, block[r]) = 1;
    d.sublattices.push_back(std::move(m));
  }
  return d;
}

namespace {

void require_unimodular(const ATypeDecomposition& d, std::size_t n) {
  for (const auto& m : d.sublattices)
    if (m.rows() == 0 || m.cols() != n) throw Error(ErrorKind::NotUnimodular, "summand of wrong shape");
  IntMatrix stacked = IntMatrix::vstack(d.sublattices);
  if (stacked.rows() != n || !is_unimodular(stacked))
    throw Error(ErrorKind::NotUnimodular, "summands do not form a basis of Z^n");
}

// Rows of basis * g, as field elements.
std::vector<std::vector<CycElement>> image_rows(const IntMatrix& basis, const CycMatrix& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<CycElement>> rows(basis.rows(), std::vector<CycElement>(n, CycElement(g.field())));
  for (std::size_t s = 0; s < basis.rows(); ++s)
    for (std::size_t l = 0; l < n; ++l) {
      if (basis(s, l) == 0) continue;
      const BigRational c(basis(s, l));
      for (std::size_t j = 0; j < n; ++j)
        if (!g(l, j).is_zero()) rows[s][j] += g(l, j) * c;
    }
  return rows;
}

// eps * rows as an integer matrix, if every entry is a rational integer.
std::optional<IntMatrix> scaled_integer_rows(const std::vector<std::vector<CycElement>>& rows,
                                             const CycElement& eps) {
  IntMatrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t s = 0; s < rows.size(); ++s)
    for (std::size_t j = 0; j < rows[s].size(); ++j) {
      if (rows[s][j].is_zero()) continue;
      CycElement v = rows[s][j] * eps;
      if (!v.is_rational() || !v.is_integral()) return std::nullopt;
      out(s, j) = v.numerators()[0];
    }
  return out;
}

}  // namespace

ATypeResult verify_a_type(const FiniteMatrixGroup& g, const ATypeDecomposition& d) {
  const std::size_t n = g.dim();
  require_unimodular(d, n);
  const CyclotomicField& field = g.field();
  const long roots = field.root_order();
  std::vector<CycElement> root_list;
  for (long k = 0; k < roots; ++k) root_list.push_back(CycElement::root_of_unity(field, k));
  std::vector<IntMatrix> hnfs;
  for (const auto& m : d.sublattices) hnfs.push_back(hermite_normal_form(m));

  ATypeResult result;
  result.certificate.root_order = roots;
  const std::size_t k = d.sublattices.size();
  for (std::size_t gi = 0; gi < g.order(); ++gi) {
    const CycMatrix& x = g.elements()[gi];
    std::vector<std::size_t> pi(k);
    std::vector<long> eps(k);
    std::vector<bool> used(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      const auto rows = image_rows(d.sublattices[i], x);
      // first nonzero entry decides which roots can make the row rational
      const CycElement* lead = nullptr;
      for (const auto& r : rows)
        for (const auto& e : r)
          if (!lead && !e.is_zero()) lead = &e;
      bool matched = false;
      for (long r = 0; r < roots && !matched && lead; ++r) {
        // eps and -eps give the same lattice; keep the one making the leading entry positive
        const CycElement scaled = (*lead) * root_list[static_cast<std::size_t>(r)];
        if (!scaled.is_rational() || scaled.rational_value() <= 0) continue;
        auto ints = scaled_integer_rows(rows, root_list[static_cast<std::size_t>(r)]);
        if (!ints) continue;
        const IntMatrix h = hermite_normal_form(*ints);
        for (std::size_t j = 0; j < k; ++j) {
          if (!used[j] && hnfs[j] == h) {
            pi[i] = j;
            eps[i] = r;
            used[j] = true;
            matched = true;
            break;
          }
        }
      }
      if (!matched) {
        result.ok = false;
        result.failed_element = gi;
        result.failed_summand = i;
        result.certificate.pi.clear();
        result.certificate.eps.clear();
        return result;
      }
    }
    result.certificate.pi.push_back(std::move(pi));
    result.certificate.eps.push_back(std::move(eps));
  }
  result.ok = true;
  return result;
}

bool check_a_type_certificate(const FiniteMatrixGroup& g, const ATypeDecomposition& d, const ATypeCertificate& cert) {
  const std::size_t k = d.sublattices.size();
  if (cert.pi.size() != g.order() || cert.eps.size() != g.order()) return false;
  if (cert.root_order != g.field().root_order()) return false;
  for (std::size_t gi = 0; gi < g.order(); ++gi) {
    if (cert.pi[gi].size() != k || cert.eps[gi].size() != k) return false;
    std::vector<std::size_t> sorted = cert.pi[gi];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < k; ++i)
      if (sorted[i] != i) return false;
    for (std::size_t i = 0; i < k; ++i) {
      const CycElement eps = CycElement::root_of_unity(g.field(), cert.eps[gi][i]);
      auto ints = scaled_integer_rows(image_rows(d.sublattices[i], g.elements()[gi]), eps);
      if (!ints) return false;
      if (!(hermite_normal_form(*ints) == hermite_normal_form(d.sublattices[cert.pi[gi][i]]))) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::vector<std::size_t>>> coordinate_partitions(std::size_t n) {
  // restricted growth strings in lexicographic order
  std::vector<std::vector<std::size_t>> strings;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t max_used) {
    if (pos == n) {
      strings.push_back(a);
      return;
    }
    for (std::size_t v = 0; v <= max_used + 1; ++v) {
      a[pos] = v;
      rec(pos + 1, std::max(max_used, v));
    }
  };
  if (n == 0) return {};
  a[0] = 0;
  rec(1, 0);
  auto blocks = [](const std::vector<std::size_t>& s) { return *std::max_element(s.begin(), s.end()) + 1; };
  std::stable_sort(strings.begin(), strings.end(),
                   [&](const auto& x, const auto& y) { return blocks(x) > blocks(y); });
  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (const auto& s : strings) {
    std::vector<std::vector<std::size_t>> part(blocks(s));
    for (std::size_t i = 0; i < n; ++i) part[s[i]].push_back(i);
    out.push_back(std::move(part));
  }
  return out;
}

CoordinateSearchResult find_a_type_coordinate(const FiniteMatrixGroup& g) {
  const std::size_t n = g.dim();
  if (n > 8) throw Error(ErrorKind::DimensionTooLarge, "coordinate search supports n <= 8");
  CoordinateSearchResult out;
  for (auto& part : coordinate_partitions(n)) {
    ATypeDecomposition d = ATypeDecomposition::coordinate(part, n);
    ATypeResult r = verify_a_type(g, d);
    if (r.ok) {
      out.found = true;
      out.partition = std::move(part);
      out.decomposition = std::move(d);
      out.certificate = std::move(r.certificate);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// {c in Z^r : (g - lambda)(c . basis) = 0}, returned as new lattice rows in Z^n.
IntMatrix eigen_sublattice(const IntMatrix& basis, const CycMatrix& g, const CycElement& lambda) {
  const std::size_t n = g.dim();
  const std::size_t r = basis.rows();
  const auto phi = static_cast<std::size_t>(g.field().degree());
  CycMatrix shifted = g - CycMatrix::identity(g.field(), n).scaled(lambda);
  // column k holds (g - lambda) b_k
  std::vector<std::vector<CycElement>> cols(r, std::vector<CycElement>(n, CycElement(g.field())));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (basis(k, l) != 0 && !shifted(i, l).is_zero()) cols[k][i] += shifted(i, l) * BigRational(basis(k, l));
  IntMatrix system(n * phi, r);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt den = 1;
    for (std::size_t k = 0; k < r; ++k) den = lcm(den, cols[k][i].denominator());
    for (std::size_t k = 0; k < r; ++k) {
      const BigInt scale = den / cols[k][i].denominator();
      for (std::size_t c = 0; c < phi; ++c) system(i * phi + c, k) = cols[k][i].numerators()[c] * scale;
    }
  }
  return integer_kernel(system) * basis;
}

}  // namespace

DiagonalizationResult simultaneous_diagonalize_over_Z(const FiniteMatrixGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "simultaneous diagonalization needs an abelian group");
  const std::size_t n = g.dim();
  const CyclotomicField& field = g.field();
  std::vector<CycMatrix> gens;
  for (const auto& x : character_source(g))
    if (!x.is_identity()) gens.push_back(x);

  std::vector<CycElement> roots;
  for (long k = 0; k < field.root_order(); ++k) roots.push_back(CycElement::root_of_unity(field, k));

  struct Piece {
    IntMatrix basis;
    std::vector<CycElement> chi;
  };
  std::vector<Piece> pieces{{IntMatrix::identity(n), {}}};
  for (const auto& x : gens) {
    std::vector<Piece> refined;
    for (const auto& piece : pieces)
      for (const auto& lambda : roots) {
        IntMatrix sub = eigen_sublattice(piece.basis, x, lambda);
        if (sub.rows() == 0) continue;
        auto chi = piece.chi;
        chi.push_back(lambda);
        refined.push_back({std::move(sub), std::move(chi)});
      }
    pieces = std::move(refined);
  }

  DiagonalizationResult out;
  std::vector<IntMatrix> blocks;
  for (const auto& piece : pieces) {
    blocks.push_back(piece.basis);
    out.characters.push_back(piece.chi);
  }
  IntMatrix stacked = blocks.empty() ? IntMatrix(0, n) : IntMatrix::vstack(blocks);
  if (stacked.rows() < n) {
    out.index = 0;
    return out;
  }
  out.index = abs(determinant(stacked));
  if (out.index != 1) return out;
  out.conjugator = stacked.transpose();
  const CycMatrix t = CycMatrix::from_integers(field, out.conjugator);
  const CycMatrix t_inv = t.inverse();
  for (const auto& x : g.elements())
    if (!(t_inv * x * t).is_diagonal()) return out;
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------

SemiInvariantFactorization factor_semi_invariant(const CycMatrix& a, const SubfieldHandle& k_ab) {
  if (!(a.field() == k_ab.field())) throw Error(ErrorKind::FieldMismatch, "factor_semi_invariant");
  if (!a.is_integral()) throw Error(ErrorKind::NotIntegral, a.to_string());
  if (!a.try_inverse()) throw Error(ErrorKind::NotInvertible, a.to_string());
  const CyclotomicField& field = a.field();
  const std::size_t n = a.dim();
  const long roots = field.root_order();

  SemiInvariantFactorization out;
  out.q = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<long> found;
    std::vector<BigInt> qrow(n);
    for (long r = 0; r < roots && !found; ++r) {
      const CycElement inv = CycElement::root_of_unity(field, -r);
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (a(i, j).is_zero()) {
          qrow[j] = 0;
          continue;
        }
        CycElement v = a(i, j) * inv;
        ok = v.is_rational() && v.is_integral();
        if (ok) qrow[j] = v.numerators()[0];
      }
      if (ok) found = r;
    }
    if (!found) {
      out.failed_row = i;
      out.reason = "row " + std::to_string(i) + " is not a root of unity times an integer vector";
      return out;
    }
    long r = *found;
    auto lead = std::find_if(qrow.begin(), qrow.end(), [](const BigInt& v) { return v != 0; });
    if (*lead < 0) {
      r = mod_floor(r + roots / 2, roots);
      for (auto& v : qrow) v = -v;
    }
    CycElement zeta = CycElement::root_of_unity(field, r);
    if (!k_ab.contains(zeta)) {
      out.failed_row = i;
      out.reason = "root of unity in row " + std::to_string(i) + " lies outside the given subfield";
      return out;
    }
    out.zetas.push_back(std::move(zeta));
    out.exponents.push_back(r);
    for (std::size_t j = 0; j < n; ++j) out.q(i, j) = qrow[j];
  }
  if (!is_unimodular(out.q)) {
    out.reason = "integer factor is not unimodular (det " + BigInt(abs(determinant(out.q))).get_str() + ")";
    out.zetas.clear();
    out.exponents.clear();
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace galstab
