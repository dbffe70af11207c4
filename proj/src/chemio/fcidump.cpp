// Copyright 2026 The haalab Authors.
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

#include "haa/fcidump.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace haa {

MolecularIntegrals::MolecularIntegrals(std::size_t norb)
    : n_orb(norb),
      h(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(norb),
                              static_cast<Eigen::Index>(norb))),
      eri(norb * norb * norb * norb, 0.0) {}

MolecularIntegrals MolecularIntegrals::permuted(
    const std::vector<std::size_t>& perm) const {
  MolecularIntegrals out(n_orb);
  out.n_elec = n_elec;
  out.ms2 = ms2;
  out.e_core = e_core;
  const std::size_t n = n_orb;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      out.h(p, q) = h(perm[p], perm[q]);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          out.eri_at(p, q, r, s) = eri_at(perm[p], perm[q], perm[r], perm[s]);
        }
      }
    }
  }
  return out;
}

namespace {

constexpr Real kDuplicateTolerance = 1e-8;

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

// Splits the namelist body into KEY -> value tokens.
std::map<std::string, std::vector<std::string>> parse_namelist(
    const std::string& body) {
  std::string spaced;
  for (char ch : body) {
    if (ch == ',') {
      spaced += ' ';
    } else if (ch == '=') {
      spaced += " = ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream ss(spaced);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);

  std::map<std::string, std::vector<std::string>> out;
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i + 1] == "=") {
      key = upper(tokens[i]);
      out[key];
      ++i;
    } else if (tokens[i] == "=") {
      throw FcidumpError("FCIDUMP header: '=' without a key");
    } else if (!key.empty()) {
      out[key].push_back(tokens[i]);
    } else {
      throw FcidumpError("FCIDUMP header: stray token '" + tokens[i] + "'");
    }
  }
  return out;
}

int header_int(const std::map<std::string, std::vector<std::string>>& nl,
               const std::string& key, std::optional<int> fallback) {
  auto it = nl.find(key);
  if (it == nl.end() || it->second.empty()) {
    if (fallback) return *fallback;
    throw FcidumpError("FCIDUMP header: missing " + key);
  }
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second.front(), &used);
    if (used != it->second.front().size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw FcidumpError("FCIDUMP header: bad value for " + key + ": '" +
                       it->second.front() + "'");
  }
}

Real parse_real(std::string tok, std::size_t line_no) {
  for (auto& ch : tok) {
    if (ch == 'D' || ch == 'd') ch = 'E';
  }
  try {
    std::size_t used = 0;
    const Real v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw FcidumpError("FCIDUMP line " + std::to_string(line_no) +
                       ": bad value '" + tok + "'");
  }
}

class Filler {
 public:
  explicit Filler(MolecularIntegrals& m)
      : m_(m),
        eri_set_(m.eri.size(), false),
        h_set_(m.n_orb * m.n_orb, false) {}

  void core(Real v, std::size_t line) {
    if (core_set_ && std::abs(m_.e_core - v) > kDuplicateTolerance) {
      throw conflict(line);
    }
    m_.e_core = v;
    core_set_ = true;
  }

  void one(std::size_t i, std::size_t j, Real v, std::size_t line) {
    for (auto [p, q] : {std::pair{i, j}, std::pair{j, i}}) {
      const std::size_t k = p * m_.n_orb + q;
      if (h_set_[k] && std::abs(m_.h(p, q) - v) > kDuplicateTolerance) {
        throw conflict(line);
      }
      m_.h(p, q) = v;
      h_set_[k] = true;
    }
  }

  void two(std::size_t i, std::size_t j, std::size_t k, std::size_t l, Real v,
           std::size_t line) {
    const std::array<std::array<std::size_t, 4>, 8> images{{{i, j, k, l},
                                                            {j, i, k, l},
                                                            {i, j, l, k},
                                                            {j, i, l, k},
                                                            {k, l, i, j},
                                                            {l, k, i, j},
                                                            {k, l, j, i},
                                                            {l, k, j, i}}};
    for (const auto& [p, q, r, s] : images) {
      const std::size_t idx = ((p * m_.n_orb + q) * m_.n_orb + r) * m_.n_orb + s;
      if (eri_set_[idx] && std::abs(m_.eri[idx] - v) > kDuplicateTolerance) {
        throw conflict(line);
      }
      m_.eri[idx] = v;
      eri_set_[idx] = true;
    }
  }

 private:
  static FcidumpError conflict(std::size_t line) {
    return FcidumpError("FCIDUMP line " + std::to_string(line) +
                        ": conflicting duplicate record");
  }

  MolecularIntegrals& m_;
  std::vector<bool> eri_set_;
  std::vector<bool> h_set_;
  bool core_set_ = false;
};

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::string body;
  bool in_header = false;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    std::string u = upper(line);
    if (!in_header) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw FcidumpError("FCIDUMP: expected '&FCI' header, got '" + line +
                           "'");
      }
      in_header = true;
      u = u.substr(pos + 4);
    }
    // Terminators: &END, $END or a lone '/'.
    std::size_t end = u.find("&END");
    if (end == std::string::npos) end = u.find("$END");
    if (end == std::string::npos) end = u.find('/');
    if (end != std::string::npos) {
      body += ' ' + u.substr(0, end);
      header_done = true;
    } else {
      body += ' ' + u;
    }
  }
  if (!header_done) throw FcidumpError("FCIDUMP: unterminated header");

  const auto nl = parse_namelist(body);
  const int norb = header_int(nl, "NORB", std::nullopt);
  if (norb < 1) throw FcidumpError("FCIDUMP header: NORB must be >= 1");
  MolecularIntegrals m(static_cast<std::size_t>(norb));
  m.n_elec = header_int(nl, "NELEC", std::nullopt);
  m.ms2 = header_int(nl, "MS2", 0);
  if (m.n_elec < 0 || m.n_elec > 2 * norb) {
    throw FcidumpError("FCIDUMP header: NELEC out of range");
  }

  Filler fill(m);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string vtok;
    if (!(ss >> vtok)) continue;
    const Real v = parse_real(vtok, line_no);
    std::array<long, 4> idx{};
    for (auto& x : idx) {
      if (!(ss >> x)) {
        throw FcidumpError("FCIDUMP line " + std::to_string(line_no) +
                           ": expected 'value i j k l'");
      }
      if (x < 0 || x > norb) {
        throw FcidumpError("FCIDUMP line " + std::to_string(line_no) +
                           ": index " + std::to_string(x) +
                           " outside [1, NORB]");
      }
    }
    std::string extra;
    if (ss >> extra) {
      throw FcidumpError("FCIDUMP line " + std::to_string(line_no) +
                         ": trailing token '" + extra + "'");
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      fill.core(v, line_no);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      fill.one(i - 1, j - 1, v, line_no);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // Orbital energy record; not needed.
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      fill.two(i - 1, j - 1, k - 1, l - 1, v, line_no);
    } else {
      throw FcidumpError("FCIDUMP line " + std::to_string(line_no) +
                         ": unsupported index pattern");
    }
  }
  return m;
}

MolecularIntegrals parse_fcidump_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_fcidump(ss);
}

MolecularIntegrals read_fcidump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FcidumpError("cannot open FCIDUMP file " + path.string());
  return parse_fcidump(in);
}

namespace {

void put_record(std::string& out, Real v, std::size_t i, std::size_t j,
                std::size_t k, std::size_t l) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), " %.17g %zu %zu %zu %zu\n", v, i, j, k, l);
  out += buf;
}

}  // namespace

std::string render_fcidump(const MolecularIntegrals& m) {
  std::string out = " &FCI NORB=" + std::to_string(m.n_orb) +
                    ",NELEC=" + std::to_string(m.n_elec) +
                    ",MS2=" + std::to_string(m.ms2) + ",\n  ORBSYM=";
  for (std::size_t i = 0; i < m.n_orb; ++i) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  const std::size_t n = m.n_orb;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const Real v = m.eri_at(i, j, k, l);
          if (v != 0.0) put_record(out, v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (m.h(i, j) != 0.0) put_record(out, m.h(i, j), i + 1, j + 1, 0, 0);
    }
  }
  put_record(out, m.e_core, 0, 0, 0, 0);
  return out;
}

}  // namespace haa
