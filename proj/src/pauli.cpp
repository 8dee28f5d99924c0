// Copyright 2026 The clustervqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cvqe/errors.hpp"
#include "cvqe/kernels.hpp"

namespace cvqe {

namespace {

constexpr double kImagResidue = 1e-12;

Pauli parse_letter(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw StructuralError(std::string("invalid Pauli letter '") + c + "'");
  }
}

void check_width(std::size_t n_qubits, const PauliString& s) {
  if (s.n_qubits() != n_qubits)
    throw StructuralError("Pauli string " + s.str() + " has " + std::to_string(s.n_qubits()) +
                          " qubits, observable has " + std::to_string(n_qubits));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

PauliString::PauliString(std::size_t n_qubits) : letters_(n_qubits, Pauli::I) {}

PauliString PauliString::from_string(std::string_view letters) {
  PauliString s;
  s.letters_.reserve(letters.size());
  for (char c : letters) s.letters_.push_back(parse_letter(c));
  return s;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli letter) {
  PauliString s(n_qubits);
  s.set(qubit, letter);
  return s;
}

void PauliString::set(std::size_t q, Pauli p) {
  if (q >= letters_.size()) throw StructuralError("qubit " + std::to_string(q) + " out of range");
  letters_[q] = p;
}

bool PauliString::is_identity() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Pauli p : letters_) out.push_back(to_char(p));
  return out;
}

std::uint64_t PauliString::x_mask() const {
  if (letters_.size() > 63) throw ResourceError("Pauli string too wide for bit masks");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q)
    if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) m |= qubit_bit(letters_.size(), q);
  return m;
}

std::uint64_t PauliString::z_mask() const {
  if (letters_.size() > 63) throw ResourceError("Pauli string too wide for bit masks");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q)
    if (letters_[q] == Pauli::Z || letters_[q] == Pauli::Y) m |= qubit_bit(letters_.size(), q);
  return m;
}

std::size_t PauliString::y_count() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Pauli::Y));
}

std::pair<std::complex<double>, PauliString> multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw StructuralError("Pauli product of mismatched widths");
  // Single-qubit table: XY = iZ, YZ = iX, ZX = iY and the reversed orders
  // pick up -i. With I=0,X=1,Y=2,Z=3 the product letter is a XOR b.
  int i_power = 0;
  PauliString out(a.n_qubits());
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    const int x = static_cast<int>(a[q]);
    const int y = static_cast<int>(b[q]);
    out.set(q, static_cast<Pauli>(x ^ y));
    if (x == 0 || y == 0 || x == y) continue;
    i_power += ((y - x + 3) % 3 == 1) ? 1 : 3;
  }
  return {kernels::i_power(static_cast<std::size_t>(i_power)), std::move(out)};
}

// ---------------------------------------------------------------------------
// Observable

Observable::Observable(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw StructuralError("observable needs at least one qubit");
}

Observable::Observable(std::size_t n_qubits, std::vector<PauliTerm> terms) : Observable(n_qubits) {
  for (const auto& t : terms) check_width(n_qubits, t.string);
  terms_ = std::move(terms);
}

void Observable::add(double coefficient, PauliString string) {
  check_width(n_qubits_, string);
  terms_.push_back({coefficient, std::move(string)});
}

void Observable::add(double coefficient, std::string_view letters) {
  add(coefficient, PauliString::from_string(letters));
}

Observable& Observable::operator+=(const Observable& other) {
  if (other.n_qubits_ != n_qubits_) throw StructuralError("observable width mismatch");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

Observable& Observable::operator*=(double scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

double Observable::coefficient(const PauliString& string) const {
  double c = 0.0;
  for (const auto& t : terms_)
    if (t.string == string) c += t.coefficient;
  return c;
}

Observable operator+(Observable a, const Observable& b) { return a += b; }

Observable operator*(double scale, Observable obs) { return obs *= scale; }

Observable normalize(const Observable& obs, double drop_tolerance) {
  std::map<PauliString, double> merged;
  for (const auto& t : obs.terms()) merged[t.string] += t.coefficient;
  std::vector<PauliTerm> terms;
  terms.reserve(merged.size());
  for (auto& [s, c] : merged)
    if (std::abs(c) >= drop_tolerance) terms.push_back({c, s});
  return Observable(obs.n_qubits(), std::move(terms));
}

std::size_t term_count(const Observable& obs) {
  const auto n = normalize(obs);
  return static_cast<std::size_t>(std::count_if(n.terms().begin(), n.terms().end(),
                                                 [](const PauliTerm& t) { return !t.string.is_identity(); }));
}

ComplexMatrix to_matrix(const Observable& obs, std::size_t max_qubits) {
  const std::size_t n = obs.n_qubits();
  if (n > max_qubits)
    throw ResourceError("dense matrix of " + std::to_string(n) + " qubits exceeds cap of " +
                        std::to_string(max_qubits));
  const std::uint64_t dim = std::uint64_t{1} << n;
  ComplexMatrix m(dim, dim);
  // P|i> = i^y (-1)^{|i & z|} |i ^ x>, so column i has one entry at row i ^ x.
  for (const auto& t : obs.terms()) {
    const auto x = t.string.x_mask();
    const auto z = t.string.z_mask();
    const cplx phase = kernels::i_power(t.string.y_count()) * t.coefficient;
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & z) & 1) ? -1.0 : 1.0;
      m(i ^ x, i) += sign * phase;
    }
  }
  return m;
}

std::complex<double> expectation(const StateVector& state, const PauliString& string) {
  if (string.n_qubits() != state.n_qubits())
    throw StructuralError("Pauli string and state have different qubit counts");
  return kernels::pauli_expectation(state.amplitudes(), string.x_mask(), string.z_mask(),
                                    string.y_count());
}

double expectation(const StateVector& state, const Observable& obs) {
  if (obs.n_qubits() != state.n_qubits())
    throw StructuralError("observable has " + std::to_string(obs.n_qubits()) + " qubits, state has " +
                          std::to_string(state.n_qubits()));
  cplx acc{};
  for (const auto& t : obs.terms()) acc += t.coefficient * expectation(state, t.string);
  const double scale = std::max(1.0, std::abs(acc.real()));
  if (std::abs(acc.imag()) > kImagResidue * scale)
    throw ConsistencyError("expectation value has imaginary part " + std::to_string(acc.imag()));
  return acc.real();
}

// ---------------------------------------------------------------------------
// CompiledObservable

CompiledObservable::CompiledObservable(const Observable& obs) : n_qubits_(obs.n_qubits()) {
  if (n_qubits_ > kMaxSimulatorQubits) throw ResourceError("observable too wide to compile");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
  std::map<std::uint64_t, std::vector<cplx>> by_mask;
  const auto merged = normalize(obs);
  for (const auto& t : merged.terms()) {
    auto& diag = by_mask[t.string.x_mask()];
    if (diag.empty()) diag.assign(dim, cplx{});
    const auto z = t.string.z_mask();
    const cplx phase = kernels::i_power(t.string.y_count()) * t.coefficient;
    for (std::uint64_t i = 0; i < dim; ++i) diag[i] += (std::popcount(i & z) & 1) ? -phase : phase;
  }
  groups_.reserve(by_mask.size());
  for (auto& [mask, diag] : by_mask) groups_.push_back({mask, std::move(diag)});
}

double CompiledObservable::expectation(const StateVector& state) const {
  if (state.n_qubits() != n_qubits_) throw StructuralError("observable/state qubit count mismatch");
  double acc = 0.0;
  for (const auto& g : groups_) acc += kernels::masked_overlap(state.amplitudes(), g.x_mask, g.diagonal).real();
  return acc;
}

// ---------------------------------------------------------------------------
// Text format

Observable parse_pauli_sum(std::string_view text, std::string_view source) {
  const std::string src(source);
  std::vector<PauliTerm> terms;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError(src, line_no, "expected '<coefficient> <letters>'");
    const auto num = line.substr(0, space);
    const auto letters = trim(line.substr(space));
    double c = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), c);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw ParseError(src, line_no, "bad coefficient '" + std::string(num) + "'");
    if (letters.empty() || letters.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(src, line_no, "expected a single Pauli word");
    PauliString s;
    try {
      s = PauliString::from_string(letters);
    } catch (const StructuralError& e) {
      throw ParseError(src, line_no, e.what());
    }
    if (width == 0) width = s.n_qubits();
    if (s.n_qubits() != width)
      throw ParseError(src, line_no, "word length " + std::to_string(s.n_qubits()) + " differs from " +
                                         std::to_string(width));
    terms.push_back({c, std::move(s)});
  }
  if (width == 0) throw ParseError(src, line_no, "no terms found");
  return Observable(width, std::move(terms));
}

Observable read_pauli_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path.string(), 0, "cannot open file");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_pauli_sum(buf.str(), path.string());
}

std::string format_pauli_sum(const Observable& obs) {
  std::string out;
  char buf[64];
  for (const auto& t : obs.terms()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), t.coefficient);
    out.append(buf, ptr);
    out.push_back(' ');
    out += t.string.str();
    out.push_back('\n');
  }
  return out;
}

}  // namespace cvqe
