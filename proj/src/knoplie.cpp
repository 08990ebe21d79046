#include "sphanti/knoplie.hpp"

#include <algorithm>
#include <stdexcept>

#include "sphanti/error.hpp"
#include "sphanti/lunatypes.hpp"

namespace sphanti {

namespace {

Matrix square(std::size_t n) { return Matrix(n, n); }

bool spans_contain(const std::vector<Vector>& basis, const Matrix& m) {
  return in_span(std::span<const Vector>(basis), m.flat());
}

std::vector<Matrix> to_matrices(const std::vector<Vector>& vs, std::size_t n) {
  std::vector<Matrix> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(Matrix::unflatten(v, n, n));
  return out;
}

const Sl2Triple& triple_for(const LiePresentation& pres, std::size_t alpha) {
  const auto it = pres.triples.find(alpha);
  if (it == pres.triples.end())
    throw InsufficientData("presentation has no sl2-triple for simple root a" + std::to_string(alpha + 1));
  return it->second;
}

// Row echelon form grown one row at a time; rows live in a fixed space.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  void add(Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto p = pivots_[i];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (std::size_t c = 0; c < width_; ++c) v[c] -= f * rows_[i][c];
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead == v.end()) return;
    const auto p = static_cast<std::size_t>(lead - v.begin());
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      if (sgn(row[p]) == 0) continue;
      const Rational f = row[p];
      for (std::size_t c = 0; c < width_; ++c) row[c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }

  bool full() const { return rows_.size() == width_; }

  std::vector<Vector> kernel() const {
    if (rows_.empty()) return nullspace(Matrix(1, width_));
    return nullspace(Matrix::from_rows(std::span<const Vector>(rows_)));
  }

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Reduces vectors modulo span(basis) using the RREF of the basis.
class Reducer {
 public:
  explicit Reducer(const std::vector<Vector>& basis) {
    if (basis.empty()) return;
    rref_ = Matrix::from_rows(std::span<const Vector>(basis));
    pivots_ = row_reduce(rref_);
  }

  Vector residual(Vector v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto p = pivots_[i];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (std::size_t c = 0; c < v.size(); ++c)
        if (sgn(rref_(i, c)) != 0) v[c] -= f * rref_(i, c);
    }
    return v;
  }

 private:
  Matrix rref_;
  std::vector<std::size_t> pivots_;
};

// Coordinates of p_alpha elements in (e, h, f, kernel).
class Sl2Projection {
 public:
  Sl2Projection(const LiePresentation& pres, std::size_t alpha)
      : n_(pres.matrix_size()), kernel_(projection_kernel(pres, alpha)) {
    const auto& t = triple_for(pres, alpha);
    basis_ = {t.e.flat(), t.h.flat(), t.f.flat()};
    for (const auto& k : kernel_) basis_.push_back(k.flat());
    system_ = Matrix::from_columns(std::span<const Vector>(basis_));
  }

  Matrix project(const Matrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("dphi_project: matrix has wrong size");
    const auto c = solve(system_, x.flat());
    if (!c) throw std::invalid_argument("dphi_project: element is not in the parabolic subalgebra p_alpha");
    return (*c)[0] * sl2_E() + (*c)[1] * sl2_H() + (*c)[2] * sl2_F();
  }

 private:
  std::size_t n_;
  std::vector<Matrix> kernel_;
  std::vector<Vector> basis_;
  Matrix system_;
};

}  // namespace

Matrix sl2_E() {
  Matrix m = square(2);
  m(0, 1) = 1;
  return m;
}

Matrix sl2_H() {
  Matrix m = square(2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return m;
}

Matrix sl2_F() {
  Matrix m = square(2);
  m(1, 0) = 1;
  return m;
}

std::string_view to_string(ImageClass c) {
  switch (c) {
    case ImageClass::torus_like: return "torus";
    case ImageClass::contains_nilpotent: return "contains-unipotent";
    case ImageClass::full: return "full";
  }
  return "?";
}

Report check_presentation(const LiePresentation& pres, const RootSystem& rs) {
  Report report;
  const auto fail_if = [&](bool ok, std::string check, std::string subject, std::string expected,
                           std::string actual) {
    report.push_back({std::move(check), std::move(subject), std::move(expected), std::move(actual), ok});
  };
  bool blocks_ok = pres.central_dim >= 0 && std::all_of(pres.blocks.begin(), pres.blocks.end(), [](int b) { return b >= 2; });
  fail_if(blocks_ok, "blocks", "presentation", "sl blocks of size >= 2", blocks_ok ? "ok" : "bad block sizes");
  if (!blocks_ok) return report;

  for (std::size_t i = 0; i < pres.b_basis.size(); ++i)
    fail_if(pres.in_algebra(pres.b_basis[i]), "in_algebra", "b[" + std::to_string(i) + "]", "in g", "outside g");
  for (std::size_t i = 0; i < pres.h_basis.size(); ++i)
    fail_if(pres.in_algebra(pres.h_basis[i]), "in_algebra", "h[" + std::to_string(i) + "]", "in g", "outside g");
  if (!all_pass(report)) return report;

  const auto b_flat = flatten_all(pres.b_basis);
  const auto h_flat = flatten_all(pres.h_basis);
  const auto closed = [&](const std::vector<Matrix>& basis, const std::vector<Vector>& flat) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (!spans_contain(flat, bracket(basis[i], basis[j]))) return false;
    return true;
  };
  fail_if(closed(pres.h_basis, h_flat), "subalgebra", "h", "closed under bracket", "not closed");
  fail_if(closed(pres.b_basis, b_flat), "subalgebra", "b", "closed under bracket", "not closed");

  for (std::size_t a = 0; a < rs.rank(); ++a) {
    const std::string subject = "triple " + rs.root_name(a);
    const auto it = pres.triples.find(a);
    if (it == pres.triples.end()) {
      fail_if(false, "triple_present", subject, "present", "missing");
      continue;
    }
    const auto& t = it->second;
    const bool shapes = pres.in_algebra(t.e) && pres.in_algebra(t.h) && pres.in_algebra(t.f);
    fail_if(shapes, "in_algebra", subject, "in g", shapes ? "in g" : "outside g");
    if (!shapes) continue;
    const bool relations = bracket(t.e, t.f) == t.h && bracket(t.h, t.e) == Rational(2) * t.e &&
                           bracket(t.h, t.f) == Rational(-2) * t.f;
    fail_if(relations, "sl2_relations", subject, "[e,f]=h, [h,e]=2e, [h,f]=-2f", relations ? "hold" : "fail");
    const bool borel = spans_contain(b_flat, t.e) && spans_contain(b_flat, t.h) && !spans_contain(b_flat, t.f);
    fail_if(borel, "triple_in_b", subject, "e, h in b and f not in b", borel ? "ok" : "violated");
  }
  for (const auto& [a, t] : pres.triples)
    if (a >= rs.rank()) fail_if(false, "triple_present", "triple #" + std::to_string(a + 1), "simple root", "unknown root");
  return report;
}

bool open_orbit_check(const LiePresentation& pres) {
  auto all = flatten_all(pres.b_basis);
  for (const auto& h : pres.h_basis) all.push_back(h.flat());
  return rank(std::span<const Vector>(all)) == pres.dimension();
}

std::vector<Matrix> parabolic_basis(const LiePresentation& pres, std::size_t alpha) {
  std::vector<Matrix> out = pres.b_basis;
  out.push_back(triple_for(pres, alpha).f);
  return out;
}

std::vector<Matrix> projection_kernel(const LiePresentation& pres, std::size_t alpha) {
  const std::size_t n = pres.matrix_size();
  const auto parabolic = parabolic_basis(pres, alpha);
  auto flat_b = flatten_all(pres.b_basis);
  std::vector<Matrix> kernel = to_matrices(independent_subset(std::span<const Vector>(flat_b)), n);
  // K <- {x in K : [p, x] in K for every p in p_alpha} until stable
  while (true) {
    const auto flat_k = flatten_all(kernel);
    const Reducer reduce(flat_k);
    const std::size_t m = kernel.size();
    Echelon constraints(m);
    for (const auto& p : parabolic) {
      std::vector<Vector> residues;
      residues.reserve(m);
      for (const auto& k : kernel) residues.push_back(reduce.residual(bracket(p, k).flat()));
      for (std::size_t c = 0; c < n * n && !constraints.full(); ++c) {
        Vector row(m);
        bool nonzero = false;
        for (std::size_t k = 0; k < m; ++k) {
          row[k] = residues[k][c];
          nonzero = nonzero || sgn(row[k]) != 0;
        }
        if (nonzero) constraints.add(std::move(row));
      }
    }
    const auto coeffs = constraints.kernel();
    if (coeffs.size() == m) return kernel;
    std::vector<Matrix> next;
    for (const auto& c : coeffs) {
      Matrix x = square(n);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(c[k]) != 0) x = x + c[k] * kernel[k];
      next.push_back(std::move(x));
    }
    kernel = std::move(next);
  }
}

std::vector<Matrix> stabilizer_in_parabolic(const LiePresentation& pres, std::size_t alpha) {
  const auto h = flatten_all(pres.h_basis);
  const auto p = flatten_all(parabolic_basis(pres, alpha));
  return to_matrices(intersect_spans(std::span<const Vector>(h), std::span<const Vector>(p)), pres.matrix_size());
}

Matrix dphi_project(const LiePresentation& pres, std::size_t alpha, const Matrix& x) {
  return Sl2Projection(pres, alpha).project(x);
}

Sl2Image classify_image(std::span<const Matrix> vectors) {
  std::vector<Vector> flat;
  for (const auto& v : vectors) {
    if (v.rows() != 2 || v.cols() != 2 || sgn(v.trace()) != 0)
      throw std::invalid_argument("classify_image: expected traceless 2x2 matrices");
    flat.push_back(v.flat());
  }
  Sl2Image image;
  image.basis = to_matrices(independent_subset(std::span<const Vector>(flat)), 2);
  switch (image.basis.size()) {
    case 0: throw DatumInconsistency("image of the stabilizer in pgl(2) is zero; it must have dimension >= 1");
    case 1:
      image.cls = sgn(determinant(image.basis.front())) != 0 ? ImageClass::torus_like : ImageClass::contains_nilpotent;
      break;
    case 2: image.cls = ImageClass::contains_nilpotent; break;
    default: image.cls = ImageClass::full; break;
  }
  return image;
}

std::optional<ColorType> resolve_torus_like(const Sl2Image& image, const std::optional<Matrix>& witness,
                                            const std::optional<int>& chi_pairing) {
  if (image.cls != ImageClass::torus_like) throw std::invalid_argument("resolve_torus_like: image is not a torus");
  if (witness) {
    if (witness->rows() != 2 || witness->cols() != 2) throw std::invalid_argument("witness must be 2x2");
    const auto inv = inverse(*witness);
    if (!inv) throw std::invalid_argument("witness is singular");
    const Matrix& t = image.basis.front();
    const Matrix conj = *witness * t * *inv;
    if (conj == -t) return ColorType::two_a;
    if (conj != t) throw std::invalid_argument("witness does not normalize the image torus");
  }
  if (chi_pairing) {
    if (*chi_pairing == 1) return ColorType::a;
    if (*chi_pairing == 2) return ColorType::two_a;
    throw DatumInconsistency("torus image but <alpha^vee, chi> = " + std::to_string(*chi_pairing) + " (expected 1 or 2)");
  }
  return std::nullopt;
}

KnopVerdict classify_knop(const SphericalDatum& datum, const ColorRecord& color, std::size_t alpha) {
  if (!datum.presentation) throw InsufficientData("Lie-algebra types need a presentation; datum has none");
  if (!color.moved_by.contains(alpha))
    throw std::invalid_argument("color '" + color.name + "' is not moved by " + datum.rs.root_name(alpha));
  const auto& pres = *datum.presentation;
  if (!open_orbit_check(pres))
    throw DatumInconsistency("b + h != g: the base point is not in the open B-orbit; conjugate h first");

  KnopVerdict verdict;
  verdict.alpha = alpha;
  const Sl2Projection projection(pres, alpha);
  std::vector<Matrix> images;
  for (const auto& x : stabilizer_in_parabolic(pres, alpha)) images.push_back(projection.project(x));
  verdict.image = classify_image(images);

  switch (verdict.image.cls) {
    case ImageClass::full:
      throw DatumInconsistency("image is all of pgl(2) for " + datum.rs.root_name(alpha) + ", which moves color '" +
                               color.name + "'");
    case ImageClass::contains_nilpotent:
      verdict.type = ColorType::b;
      verdict.resolved_by = "image";
      return verdict;
    case ImageClass::torus_like: break;
  }

  for (const auto& w : pres.witnesses) {
    if (w.color != color.name || w.root != alpha) continue;
    if (auto t = resolve_torus_like(verdict.image, w.matrix, std::nullopt)) {
      verdict.type = t;
      verdict.resolved_by = "witness";
      return verdict;
    }
  }
  if (color.chi) {
    const Rational p = datum.rs.pair_coroot(alpha, *color.chi);
    if (!is_integer(p)) throw DatumInconsistency("non-integral pairing of chi for color '" + color.name + "'");
    verdict.type = resolve_torus_like(verdict.image, std::nullopt, static_cast<int>(to_int64(p)));
    verdict.resolved_by = "chi";
    return verdict;
  }
  if (datum.spherical_roots) {
    const auto t = classify_luna(datum, color);
    if (t == ColorType::b)
      throw DatumInconsistency("torus image but spherical roots give type b for color '" + color.name + "'");
    verdict.type = t;
    verdict.resolved_by = "sigma";
    return verdict;
  }
  verdict.resolved_by = "unresolved";
  return verdict;
}

ColorType classify_knop(const SphericalDatum& datum, const ColorRecord& color) {
  std::optional<ColorType> agreed;
  for (auto a : color.moved_by) {
    const auto v = classify_knop(datum, color, a);
    if (!v.type) continue;
    if (agreed && *agreed != *v.type)
      throw DatumInconsistency("moving roots of color '" + color.name + "' give different Lie-algebra types");
    agreed = v.type;
  }
  if (!agreed)
    throw InsufficientData("color '" + color.name +
                           "' has a torus image but no witness, chi, or spherical roots to separate a from 2a");
  return *agreed;
}

Report audit_images(const SphericalDatum& datum) {
  if (!datum.presentation) throw InsufficientData("image audit needs a presentation; datum has none");
  const auto& pres = *datum.presentation;
  const auto& rs = datum.rs;
  Report report;
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    const Sl2Projection projection(pres, a);
    std::vector<Matrix> images;
    for (const auto& x : stabilizer_in_parabolic(pres, a)) images.push_back(projection.project(x));
    const auto image = classify_image(images);
    const bool full = image.cls == ImageClass::full;
    const bool in_sp = datum.sp.contains(a);
    report.push_back({"image_full_iff_sp", rs.root_name(a), in_sp ? "full" : "proper",
                      std::string(to_string(image.cls)), full == in_sp});
    if (full && datum.lattice_m) {
      for (std::size_t j = 0; j < datum.lattice_m->size(); ++j) {
        const Rational got = rs.pair_coroot(a, (*datum.lattice_m)[j]);
        report.push_back({"full_image_kills_M", rs.root_name(a) + " / M[" + std::to_string(j) + "]", "0",
                          to_string(got), sgn(got) == 0});
      }
    }
  }
  return report;
}

}  // namespace sphanti
