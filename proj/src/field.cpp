// Copyright 2026 The cdu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdu/field.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <sstream>

#include "cdu/error.hpp"

namespace cdu::gf {

namespace {

__extension__ using UInt = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<UInt>(a) * b % m);
}

}  // namespace

std::string format_spec(const FieldSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.p << ",n=" << spec.n << ",mod=";
  for (std::size_t i = spec.modulus.size(); i-- > 0;) {
    os << spec.modulus[i];
    if (spec.p != 2 && i != 0) os << ',';
  }
  return os.str();
}

FieldSpec parse_spec(std::string_view text) {
  FieldSpec spec;
  bool have_p = false, have_n = false, in_mod = false;
  std::vector<std::string> mod_tokens;
  std::size_t pos = 0;
  auto parse_uint = [&](std::string_view s) -> std::uint32_t {
    if (s.empty()) throw Error(Errc::ParseError, "empty number in field spec");
    std::uint64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw Error(Errc::ParseError, "bad digit in field spec: " + std::string(s));
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      if (v > 0xffffffffu) throw Error(Errc::ParseError, "number too large in field spec");
    }
    return static_cast<std::uint32_t>(v);
  };
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.starts_with("p=")) {
      spec.p = parse_uint(tok.substr(2));
      have_p = true;
      in_mod = false;
    } else if (tok.starts_with("n=")) {
      spec.n = parse_uint(tok.substr(2));
      have_n = true;
      in_mod = false;
    } else if (tok.starts_with("mod=")) {
      in_mod = true;
      mod_tokens.emplace_back(tok.substr(4));
    } else if (in_mod) {
      mod_tokens.emplace_back(tok);
    } else if (!tok.empty()) {
      throw Error(Errc::ParseError, "unexpected token in field spec: " + std::string(tok));
    }
    pos = end + 1;
  }
  if (!have_p || !have_n) throw Error(Errc::ParseError, "field spec needs p= and n=");
  std::vector<std::uint32_t> msb_first;
  if (mod_tokens.size() == 1) {
    for (char ch : mod_tokens.front()) {
      if (ch < '0' || ch > '9') throw Error(Errc::ParseError, "bad modulus digit");
      msb_first.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  } else {
    for (const auto& t : mod_tokens) msb_first.push_back(parse_uint(t));
  }
  spec.modulus.assign(msb_first.rbegin(), msb_first.rend());
  return spec;
}

FieldPtr FieldCtx::build(std::uint32_t p, std::uint32_t n) { return build(FieldSpec{p, n, {}}); }

FieldPtr FieldCtx::build(const FieldSpec& spec) {
  if (!poly::is_prime(spec.p)) {
    throw Error(Errc::NonPrimeCharacteristic, std::to_string(spec.p) + " is not prime");
  }
  if (spec.n < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    q *= spec.p;
    if (q > kMaxOrder) {
      throw Error(Errc::UnsupportedFieldSize, "p^n exceeds " + std::to_string(kMaxOrder));
    }
  }
  poly::Poly modulus = spec.modulus;
  if (modulus.empty()) {
    modulus = poly::least_irreducible(spec.p, spec.n);
  } else {
    for (auto c : modulus) {
      if (c >= spec.p) throw Error(Errc::DegreeMismatch, "modulus coefficient out of range");
    }
    poly::trim(modulus);
    if (poly::degree(modulus) != static_cast<int>(spec.n) || modulus.back() != 1) {
      throw Error(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(spec.n));
    }
    if (!poly::is_irreducible(modulus, spec.p)) {
      throw Error(Errc::ReducibleModulus, format_spec({spec.p, spec.n, modulus}));
    }
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = spec.p;
  ctx->n_ = spec.n;
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->modulus_ = std::move(modulus);
  ctx->pow_p_.resize(spec.n + 1);
  ctx->pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= spec.n; ++i) ctx->pow_p_[i] = ctx->pow_p_[i - 1] * spec.p;
  ctx->init_tables();
  return ctx;
}

void FieldCtx::init_tables() {
  // Primitive element: least index whose order is q-1.
  const std::uint64_t group = q_ - 1;
  const auto factors = poly::prime_factors(group);
  for (std::uint32_t i = 1; i < q_; ++i) {
    bool primitive = true;
    for (auto f : factors) {
      if (pow_slow(Elem{i}, group / f) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = Elem{i};
      break;
    }
  }

  frob_images_.assign(n_, std::vector<Elem>(n_));
  for (std::uint32_t j = 0; j < n_; ++j) frob_images_[0][j] = basis(j);
  for (std::uint32_t k = 1; k < n_; ++k) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      frob_images_[k][j] = pow_slow(frob_images_[k - 1][j], p_);
    }
  }
  basis_trace_.resize(n_);
  for (std::uint32_t j = 0; j < n_; ++j) {
    Elem t{};
    for (std::uint32_t k = 0; k < n_; ++k) t = add(t, frob_images_[k][j]);
    basis_trace_[j] = t.v;  // lies in F_p, so the index is the value
  }

  if (q_ <= kTableThreshold) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem cur = one();
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = cur.v;
      log_[cur.v] = i;
      cur = mul_poly(cur, generator_);
    }
  }
}

Elem FieldCtx::scalar(std::int64_t k) const noexcept {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::elem(std::uint64_t index) const {
  if (index >= q_) {
    throw Error(Errc::InvalidElement, std::to_string(index) + " >= q = " + std::to_string(q_));
  }
  return Elem{static_cast<std::uint32_t>(index)};
}

std::vector<std::uint32_t> FieldCtx::digits(Elem x) const {
  std::vector<std::uint32_t> d(n_);
  std::uint32_t v = x.v;
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < n_ && i < d.size(); ++i) v += (d[i] % p_) * pow_p_[i];
  return Elem{v};
}

Elem FieldCtx::add(Elem x, Elem y) const noexcept {
  if (p_ == 2) return Elem{x.v ^ y.v};
  std::uint32_t a = x.v, b = y.v, r = 0;
  for (std::uint32_t i = 0; i < n_ && (a | b); ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return Elem{r};
}

Elem FieldCtx::neg(Elem x) const noexcept {
  if (p_ == 2) return x;
  std::uint32_t a = x.v, r = 0;
  for (std::uint32_t i = 0; i < n_ && a; ++i) {
    const std::uint32_t d = a % p_;
    if (d) r += (p_ - d) * pow_p_[i];
    a /= p_;
  }
  return Elem{r};
}

Elem FieldCtx::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem FieldCtx::scale(std::uint32_t k, Elem x) const noexcept {
  k %= p_;
  if (k == 0) return zero();
  if (k == 1) return x;
  std::uint32_t a = x.v, r = 0;
  for (std::uint32_t i = 0; i < n_ && a; ++i) {
    r += static_cast<std::uint32_t>((std::uint64_t(a % p_) * k) % p_) * pow_p_[i];
    a /= p_;
  }
  return Elem{r};
}

Elem FieldCtx::mul_poly(Elem x, Elem y) const noexcept {
  if (p_ == 2) {
    std::uint64_t a = x.v, acc = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if ((y.v >> i) & 1u) acc ^= a << i;
    }
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < modulus_.size(); ++i) m |= std::uint64_t(modulus_[i]) << i;
    for (int bit = 2 * static_cast<int>(n_) - 2; bit >= static_cast<int>(n_); --bit) {
      if ((acc >> bit) & 1u) acc ^= m << (bit - static_cast<int>(n_));
    }
    return Elem{static_cast<std::uint32_t>(acc)};
  }
  const auto a = digits(x);
  const auto b = digits(y);
  std::vector<std::uint64_t> acc(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    for (std::uint32_t j = 0; j < n_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
  }
  // X^n = -(m_0 + ... + m_{n-1} X^{n-1}) for the monic modulus.
  for (std::size_t d = acc.size(); d-- > n_;) {
    const std::uint64_t c = acc[d];
    if (!c) continue;
    acc[d] = 0;
    const std::size_t shift = d - n_;
    for (std::uint32_t j = 0; j < n_; ++j) {
      acc[shift + j] = (acc[shift + j] + (p_ - modulus_[j]) % p_ * c) % p_;
    }
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) r += static_cast<std::uint32_t>(acc[i]) * pow_p_[i];
  return Elem{r};
}

Elem FieldCtx::mul(Elem x, Elem y) const noexcept {
  if (x.v == 0 || y.v == 0) return zero();
  if (exp_.empty()) return mul_poly(x, y);
  std::uint32_t s = log_[x.v] + log_[y.v];
  if (s >= q_ - 1) s -= q_ - 1;
  return Elem{exp_[s]};
}

Elem FieldCtx::inv(Elem x) const {
  if (x.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (exp_.empty()) return pow_slow(x, q_ - 2);
  const std::uint32_t l = log_[x.v];
  return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem FieldCtx::div(Elem x, Elem y) const { return mul(x, inv(y)); }

Elem FieldCtx::pow_slow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (x.v == 0) return zero();
  e %= (q_ - 1);
  if (e == 0) e = q_ - 1;
  Elem result = one(), base = x;
  while (e) {
    if (e & 1u) result = mul_poly(result, base);
    e >>= 1;
    if (e) base = mul_poly(base, base);
  }
  return result;
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (x.v == 0) return zero();
  if (exp_.empty()) return pow_slow(x, e);
  return Elem{exp_[mulmod(log_[x.v], e % (q_ - 1), q_ - 1)]};
}

Elem FieldCtx::frobenius(Elem x, std::uint64_t k) const noexcept {
  k %= n_;
  if (k == 0 || x.v == 0) return x;
  if (!exp_.empty()) return Elem{exp_[mulmod(log_[x.v], pow_p_[k], q_ - 1)]};
  Elem r{};
  std::uint32_t a = x.v;
  for (std::uint32_t j = 0; j < n_ && a; ++j) {
    r = add(r, scale(a % p_, frob_images_[k][j]));
    a /= p_;
  }
  return r;
}

void FieldCtx::require_divisor(std::uint32_t m) const {
  if (m == 0 || n_ % m != 0) {
    throw Error(Errc::NonDivisorSubfieldDegree,
                std::to_string(m) + " does not divide " + std::to_string(n_));
  }
}

Elem FieldCtx::rel_trace(Elem x, std::uint32_t m) const {
  require_divisor(m);
  Elem t{};
  for (std::uint32_t i = 0; i < n_; i += m) t = add(t, frobenius(x, i));
  return t;
}

std::uint32_t FieldCtx::abs_trace(Elem x) const noexcept {
  std::uint64_t t = 0;
  std::uint32_t a = x.v;
  for (std::uint32_t j = 0; j < n_ && a; ++j) {
    t += std::uint64_t(a % p_) * basis_trace_[j];
    a /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

bool FieldCtx::in_subfield(Elem x, std::uint32_t m) const {
  require_divisor(m);
  return frobenius(x, m) == x;
}

std::vector<Elem> FieldCtx::subfield_elements(std::uint32_t m) const {
  require_divisor(m);
  std::vector<Elem> out;
  if (m == n_) {
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(i);
    return out;
  }
  // F_{p^m}^* is generated by g^((q-1)/(p^m-1)).
  std::uint64_t sub_order = 1;
  for (std::uint32_t i = 0; i < m; ++i) sub_order *= p_;
  const Elem h = pow(generator_, (q_ - 1) / (sub_order - 1));
  out.push_back(zero());
  Elem cur = one();
  for (std::uint64_t i = 0; i + 1 < sub_order; ++i) {
    out.push_back(cur);
    cur = mul(cur, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FieldCtx::is_dth_power(Elem x, std::uint64_t d) const noexcept {
  if (x.v == 0 || d == 0) return x.v == 0 ? true : x == one();
  const std::uint64_t g = std::gcd(d, std::uint64_t{q_ - 1});
  return pow(x, (q_ - 1) / g) == one();
}

std::optional<Elem> FieldCtx::dth_root(Elem x, std::uint64_t d) const {
  if (x.v == 0) return zero();
  if (!is_dth_power(x, d)) return std::nullopt;
  if (d == 0) return one();
  const std::uint64_t group = q_ - 1;
  if (exp_.empty()) {
    for (std::uint32_t i = 1; i < q_; ++i) {
      if (pow(Elem{i}, d) == x) return Elem{i};
    }
    return std::nullopt;
  }
  const std::uint64_t g = std::gcd(d, group);
  const std::uint64_t e = log_[x.v];
  const std::uint64_t mod = group / g;
  const std::uint64_t dd = (d / g) % mod;
  // dd is invertible mod `mod`; solve j * dd = e / g (mod mod)
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(mod), nr = static_cast<std::int64_t>(dd);
  while (nr != 0) {
    const std::int64_t qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (mod == 1) return one();
  const std::uint64_t dinv = static_cast<std::uint64_t>((t % static_cast<std::int64_t>(mod) + static_cast<std::int64_t>(mod)) % static_cast<std::int64_t>(mod));
  const std::uint64_t j = mulmod(e / g, dinv, mod);
  return exp(j);
}

std::uint64_t FieldCtx::order(Elem x) const {
  if (x.v == 0) throw Error(Errc::DivisionByZero, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (auto f : poly::prime_factors(q_ - 1)) {
    while (ord % f == 0 && pow(x, ord / f) == one()) ord /= f;
  }
  return ord;
}

std::string FieldCtx::to_string(Elem x) const {
  if (x.v == 0) return "0";
  const auto d = digits(x);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (!d[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << '*';
    os << 'X';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Embedding::Embedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->n() % from_->n() != 0) {
    throw Error(Errc::ShapeMismatch, "no embedding " + from_->spec_string() + " -> " + to_->spec_string());
  }
  const auto& m = from_->modulus();
  bool found = false;
  for (std::uint32_t i = 0; i < to_->q() && !found; ++i) {
    const Elem r{i};
    Elem acc{};
    for (std::size_t j = m.size(); j-- > 0;) acc = to_->add(to_->mul(acc, r), to_->scalar(m[j]));
    if (acc.v == 0) {
      root_ = r;
      found = true;
    }
  }
  if (!found) throw Error(Errc::ShapeMismatch, "source modulus has no root in target");
  powers_.resize(from_->n());
  Elem cur = to_->one();
  for (std::uint32_t j = 0; j < from_->n(); ++j) {
    powers_[j] = cur;
    cur = to_->mul(cur, root_);
  }
}

Elem Embedding::operator()(Elem x) const {
  Elem r{};
  std::uint32_t a = x.v;
  const std::uint32_t p = from_->p();
  for (std::uint32_t j = 0; j < from_->n() && a; ++j) {
    r = to_->add(r, to_->scale(a % p, powers_[j]));
    a /= p;
  }
  return r;
}

}  // namespace cdu::gf
