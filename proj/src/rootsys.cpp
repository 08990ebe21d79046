#include "sphanti/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "sphanti/error.hpp"

namespace sphanti {

namespace {

constexpr int kMaxTotalRank = 64;

int parse_positive(std::string_view digits, std::string_view context) {
  int value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end || value < 0)
    throw ParseError("bad rank in root system spec: '" + std::string(context) + "'");
  return value;
}

Family parse_family(char c, std::string_view context) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw ParseError("unknown Dynkin family in '" + std::string(context) + "'");
  }
}

std::string factor_name(const Factor& f) { return std::string(1, family_letter(f.family)) + std::to_string(f.rank); }

// Symmetric form (alpha_i, alpha_j), scaled so every entry is an integer.
std::vector<std::vector<int>> gram_block(Family family, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  const auto edge = [&](int i, int j, int value) { g[i][j] = g[j][i] = value; };
  switch (family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:  // alpha_n = e_n short
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
    case Family::C:  // alpha_n = 2 e_n long
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      edge(0, 2, -1);
      edge(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case Family::G:  // alpha_1 short, alpha_2 long
      g[0][0] = 2;
      g[1][1] = 6;
      edge(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

int RootSystemSpec::semisimple_rank() const {
  int total = 0;
  for (const auto& f : factors) total += f.rank;
  return total;
}

std::string RootSystemSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += factor_name(factors[i]);
  }
  if (central_rank > 0) {
    if (!out.empty()) out += '+';
    out += "T" + std::to_string(central_rank);
  }
  return out.empty() ? "T0" : out;
}

RootSystemSpec parse_root_system_spec(std::string_view text) {
  RootSystemSpec spec;
  std::string_view body = text;
  const auto plus = text.find('+');
  if (plus != std::string_view::npos) {
    const auto torus = text.substr(plus + 1);
    if (torus.size() < 2 || torus.front() != 'T') throw ParseError("bad central torus suffix in '" + std::string(text) + "'");
    spec.central_rank = parse_positive(torus.substr(1), text);
    body = text.substr(0, plus);
    if (body.empty()) throw ParseError("empty factor list before '+' in '" + std::string(text) + "'");
  } else if (!text.empty() && text.front() == 'T') {
    spec.central_rank = parse_positive(text.substr(1), text);
    body = {};
  }
  while (!body.empty()) {
    const auto cut = body.find('x');
    const auto token = body.substr(0, cut);
    if (token.size() < 2) throw ParseError("bad factor '" + std::string(token) + "' in '" + std::string(text) + "'");
    const Family family = parse_family(token.front(), text);
    const int rank = parse_positive(token.substr(1), text);
    spec.factors.push_back({family, rank});
    if (cut == std::string_view::npos) break;
    body.remove_prefix(cut + 1);
    if (body.empty()) throw ParseError("trailing 'x' in '" + std::string(text) + "'");
  }
  if (spec.factors.empty() && spec.central_rank == 0 && text != "T0")
    throw ParseError("empty root system spec '" + std::string(text) + "'");
  check_spec(spec);
  return spec;
}

void check_spec(const RootSystemSpec& spec) {
  for (const auto& f : spec.factors) {
    const int r = f.rank;
    bool ok = false;
    switch (f.family) {
      case Family::A: ok = r >= 1; break;
      case Family::B: ok = r >= 2; break;
      case Family::C: ok = r >= 2; break;
      case Family::D: ok = r >= 3; break;
      case Family::E: ok = r >= 6 && r <= 8; break;
      case Family::F: ok = r == 4; break;
      case Family::G: ok = r == 2; break;
    }
    if (!ok) throw std::invalid_argument("illegal factor " + factor_name(f));
  }
  if (spec.semisimple_rank() > kMaxTotalRank)
    throw std::invalid_argument("total semisimple rank " + std::to_string(spec.semisimple_rank()) + " exceeds 64");
  if (spec.central_rank < 0) throw std::invalid_argument("negative central rank");
}

std::vector<std::vector<int>> cartan_block(Family family, int rank) {
  check_spec(RootSystemSpec{{{family, rank}}, 0});
  const auto g = gram_block(family, rank);
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c[i][j] = 2 * g[i][j] / g[i][i];
  return c;
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(std::move(spec)) {
  check_spec(spec_);
  const auto n = static_cast<std::size_t>(spec_.semisimple_rank());
  cartan_.assign(n, std::vector<int>(n, 0));
  std::size_t offset = 0;
  for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
    const auto block = cartan_block(spec_.factors[f].family, spec_.factors[f].rank);
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) cartan_[offset + i][offset + j] = block[i][j];
      factor_of_.push_back(f);
    }
    offset += block.size();
  }
}

RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem(spec); }

std::string RootSystem::root_name(std::size_t i) const {
  if (i >= rank()) throw std::out_of_range("simple root index out of range");
  return "a" + std::to_string(i + 1);
}

std::size_t RootSystem::root_index(std::string_view name) const {
  if (name.size() >= 2 && name.front() == 'a') {
    std::size_t idx = 0;
    const auto* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(name.data() + 1, end, idx);
    if (ec == std::errc() && ptr == end && idx >= 1 && idx <= rank()) return idx - 1;
  }
  throw std::invalid_argument("unknown simple root '" + std::string(name) + "' (system has a1..a" +
                              std::to_string(rank()) + ")");
}

RootSet RootSystem::all_simple() const {
  RootSet s;
  for (std::size_t i = 0; i < rank(); ++i) s.insert(i);
  return s;
}

Weight RootSystem::zero_weight() const { return {Vector(rank()), Vector(central_rank())}; }
Coweight RootSystem::zero_coweight() const { return {Vector(rank()), Vector(central_rank())}; }

Weight RootSystem::fundamental_weight(std::size_t i) const {
  Weight w = zero_weight();
  w.fund.at(i) = 1;
  return w;
}

Weight RootSystem::simple_root(std::size_t i) const {
  Weight w = zero_weight();
  for (std::size_t k = 0; k < rank(); ++k) w.fund[k] = cartan_[k].at(i);
  return w;
}

Weight RootSystem::root_weight(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != rank()) throw std::invalid_argument("root coefficient vector has wrong length");
  Weight w = zero_weight();
  for (std::size_t k = 0; k < rank(); ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(cartan_[k][j]) * coeffs[j];
    w.fund[k] = Rational(static_cast<long>(s));
  }
  return w;
}

Rational RootSystem::pair_coroot(std::size_t i, const Weight& w) const {
  check_weight(w);
  if (i >= rank()) throw std::out_of_range("simple coroot index out of range");
  return w.fund[i];
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.fund.size() != rank() || w.central.size() != central_rank())
    throw std::invalid_argument("weight has dimensions (" + std::to_string(w.fund.size()) + "," +
                                std::to_string(w.central.size()) + "), root system " + spec_.to_string() +
                                " needs (" + std::to_string(rank()) + "," + std::to_string(central_rank()) + ")");
}

void RootSystem::check_coweight(const Coweight& cw) const {
  if (cw.fund.size() != rank() || cw.central.size() != central_rank())
    throw std::invalid_argument("coweight dimensions do not match root system " + spec_.to_string());
}

void RootSystem::check_subset(const RootSet& subset) const {
  if (!subset.empty() && *subset.rbegin() >= rank()) throw std::out_of_range("simple root index out of range");
}

std::vector<Root> RootSystem::positive_roots(const RootSet& subset) const {
  check_subset(subset);
  using Coeffs = std::vector<std::int64_t>;
  std::set<Coeffs> known;
  std::vector<Coeffs> layer;
  std::vector<Coeffs> all;
  for (auto i : subset) {
    Coeffs c(rank(), 0);
    c[i] = 1;
    layer.push_back(c);
    known.insert(c);
  }
  const auto pairing = [&](const Coeffs& beta, std::size_t i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(cartan_[i][j]) * beta[j];
    return s;
  };
  // Root strings: beta + alpha_i is a root iff p - <alpha_i^vee, beta> > 0,
  // p = max{k : beta - k alpha_i is a root}.
  while (!layer.empty()) {
    std::set<Coeffs> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (auto i : subset) {
        std::int64_t p = 0;
        Coeffs down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing(beta, i) > 0) {
          Coeffs up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  std::vector<Root> roots;
  roots.reserve(all.size());
  for (auto& c : all) roots.push_back({c, root_weight(c)});
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simple_coeffs < b.simple_coeffs;
  });
  return roots;
}

std::vector<std::int64_t> RootSystem::two_rho(const RootSet& subset) const {
  std::vector<std::int64_t> sum(rank(), 0);
  for (const auto& r : positive_roots(subset))
    for (std::size_t k = 0; k < rank(); ++k) sum[k] += to_int64(r.as_weight.fund[k]);
  return sum;
}

Weight RootSystem::rho(const RootSet& subset) const {
  Weight w = zero_weight();
  const auto twice = two_rho(subset);
  for (std::size_t k = 0; k < rank(); ++k) w.fund[k] = Rational(static_cast<long>(twice[k]), 2);
  for (auto& x : w.fund) x.canonicalize();
  return w;
}

std::int64_t Root::height() const {
  std::int64_t h = 0;
  for (auto c : simple_coeffs) h += c;
  return h;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.fund.size() != b.fund.size() || a.central.size() != b.central.size())
    throw std::invalid_argument("weight dimension mismatch");
  Weight c = a;
  for (std::size_t i = 0; i < c.fund.size(); ++i) c.fund[i] += b.fund[i];
  for (std::size_t i = 0; i < c.central.size(); ++i) c.central[i] += b.central[i];
  return c;
}

Weight operator-(const Weight& a, const Weight& b) { return a + Rational(-1) * b; }

Weight operator*(const Rational& s, const Weight& w) {
  Weight c = w;
  for (auto& x : c.fund) x *= s;
  for (auto& x : c.central) x *= s;
  return c;
}

Rational pair(const Coweight& cw, const Weight& w) {
  if (cw.fund.size() != w.fund.size() || cw.central.size() != w.central.size())
    throw std::invalid_argument("pairing: coweight and weight dimensions differ");
  return dot(cw.fund, w.fund) + dot(cw.central, w.central);
}

Vector flatten(const Weight& w) {
  Vector v = w.fund;
  v.insert(v.end(), w.central.begin(), w.central.end());
  return v;
}

Vector flatten(const Coweight& cw) {
  Vector v = cw.fund;
  v.insert(v.end(), cw.central.begin(), cw.central.end());
  return v;
}

}  // namespace sphanti
