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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "cvqe/errors.hpp"
#include "cvqe/fermion.hpp"

namespace cvqe {

FcidumpData::FcidumpData(std::size_t n_orbitals, int n_electrons, int ms2)
    : n_orbitals_(n_orbitals),
      n_electrons_(n_electrons),
      ms2_(ms2),
      h1_(n_orbitals * n_orbitals, 0.0),
      h2_(n_orbitals * n_orbitals * n_orbitals * n_orbitals, 0.0) {
  if (n_orbitals == 0) throw StructuralError("FCIDUMP needs at least one orbital");
  if (n_electrons < 0 || static_cast<std::size_t>(n_electrons) > 2 * n_orbitals)
    throw StructuralError("NELEC=" + std::to_string(n_electrons) + " does not fit in " +
                          std::to_string(n_orbitals) + " orbitals");
}

void FcidumpData::set_one_body(std::size_t p, std::size_t q, double v) {
  h1_[p * n_orbitals_ + q] = v;
  h1_[q * n_orbitals_ + p] = v;
}

void FcidumpData::set_two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v) {
  const std::size_t n = n_orbitals_;
  auto at = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> double& {
    return h2_[((a * n + b) * n + c) * n + d];
  };
  at(p, q, r, s) = v;
  at(q, p, r, s) = v;
  at(p, q, s, r) = v;
  at(q, p, s, r) = v;
  at(r, s, p, q) = v;
  at(s, r, p, q) = v;
  at(r, s, q, p) = v;
  at(s, r, q, p) = v;
}

void FcidumpData::validate(double tol) const {
  const std::size_t n = n_orbitals_;
  if (static_cast<std::size_t>(n_electrons_) > 2 * n) throw StructuralError("too many electrons");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (std::abs(one_body(p, q) - one_body(q, p)) > tol) throw StructuralError("one-body integrals not symmetric");
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = two_body(p, q, r, s);
          for (double w : {two_body(q, p, r, s), two_body(p, q, s, r), two_body(r, s, p, q)})
            if (std::abs(v - w) > tol) throw StructuralError("two-body integrals break 8-fold symmetry");
        }
    }
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool parse_double(std::string tok, double& out) {
  // Fortran writers sometimes emit 1.0D+00.
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end != tok.c_str() && *end == '\0';
}

bool parse_index(const std::string& tok, long& out) {
  char* end = nullptr;
  out = std::strtol(tok.c_str(), &end, 10);
  return end != tok.c_str() && *end == '\0';
}

}  // namespace

FcidumpData parse_fcidump(std::string_view text, std::string_view source) {
  const std::string src(source);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;

  // Header: everything from &FCI up to a line holding &END or a lone '/'.
  std::string header;
  bool started = false;
  bool closed = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string up = upper(raw);
    if (!started) {
      if (up.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (up.find("&FCI") == std::string::npos) throw ParseError(src, line_no, "expected '&FCI' header");
      started = true;
    }
    header += up + " ";
    if (up.find("&END") != std::string::npos || up.find('/') != std::string::npos) {
      closed = true;
      break;
    }
  }
  if (!closed) throw ParseError(src, line_no, "unterminated &FCI header");

  auto header_int = [&](const char* key) {
    const std::regex re(std::string("\\b") + key + "\\s*=\\s*(-?\\d+)");
    std::smatch m;
    if (!std::regex_search(header, m, re)) throw ParseError(src, line_no, std::string("header lacks ") + key);
    return std::stol(m[1].str());
  };
  const long norb = header_int("NORB");
  const long nelec = header_int("NELEC");
  const long ms2 = header_int("MS2");
  if (norb <= 0) throw ParseError(src, line_no, "NORB must be positive");

  FcidumpData data;
  try {
    data = FcidumpData(static_cast<std::size_t>(norb), static_cast<int>(nelec), static_cast<int>(ms2));
  } catch (const StructuralError& e) {
    throw ParseError(src, line_no, e.what());
  }

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5) throw ParseError(src, line_no, "expected 'value i j k l'");
    double value = 0.0;
    if (!parse_double(tok[0], value)) throw ParseError(src, line_no, "non-numeric value '" + tok[0] + "'");
    long idx[4];
    for (int k = 0; k < 4; ++k) {
      if (!parse_index(tok[k + 1], idx[k])) throw ParseError(src, line_no, "non-numeric index '" + tok[k + 1] + "'");
      if (idx[k] < 0 || idx[k] > norb)
        throw ParseError(src, line_no, "orbital index " + tok[k + 1] + " outside 0.." + std::to_string(norb));
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      data.set_core_energy(value);
    } else if (k == 0 && l == 0) {
      if (j == 0) continue;  // orbital energy line; not part of the Hamiltonian
      if (i == 0) throw ParseError(src, line_no, "one-body line needs two orbital indices");
      data.set_one_body(i - 1, j - 1, value);
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) throw ParseError(src, line_no, "two-body line has a zero index");
      data.set_two_body(i - 1, j - 1, k - 1, l - 1, value);
    }
  }
  return data;
}

FcidumpData read_fcidump(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path.string(), 0, "cannot open file");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_fcidump(buf.str(), path.string());
}

std::string format_fcidump(const FcidumpData& data) {
  const std::size_t n = data.n_orbitals();
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof(buf), " &FCI NORB=%zu,NELEC=%d,MS2=%d,\n  ORBSYM=", n, data.n_electrons(), data.ms2());
  out += buf;
  for (std::size_t p = 0; p < n; ++p) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  auto line = [&](double v, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::snprintf(buf, sizeof(buf), "%.17g %zu %zu %zu %zu\n", v, i, j, k, l);
    out += buf;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * n + q < r * n + s) continue;
          const double v = data.two_body(p, q, r, s);
          if (v != 0.0) line(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      if (data.one_body(p, q) != 0.0) line(data.one_body(p, q), p + 1, q + 1, 0, 0);
  line(data.core_energy(), 0, 0, 0, 0);
  return out;
}

}  // namespace cvqe
