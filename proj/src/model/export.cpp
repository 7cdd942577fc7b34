// Copyright 2026 The cssnd Authors
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

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "cssnd/model.hpp"

namespace cssnd {
namespace {

constexpr size_t kLpNameLimit = 255;
constexpr size_t kLpLineWidth = 78;
constexpr size_t kMpsNumberWidth = 12;

std::string Shortest(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

// Fits a number into a fixed MPS field, losing precision only if needed.
std::string FixedWidth(double value) {
  std::string text = Shortest(value);
  for (int precision = 12; text.size() > kMpsNumberWidth && precision > 0; --precision) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", precision, value);
    text = buf.data();
  }
  return text;
}

std::string Code(char prefix, size_t index) {
  std::array<char, 16> buf{};
  std::snprintf(buf.data(), buf.size(), "%c%07zu", prefix, index + 1);
  return buf.data();
}

struct Names {
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::string sidecar;
};

Names MapNames(const ModelIR& model, bool always_rename, size_t limit) {
  bool rename = always_rename;
  for (const Variable& v : model.variables) rename = rename || v.name.size() > limit;
  for (const Constraint& c : model.constraints) rename = rename || c.name.size() > limit;
  Names out;
  for (size_t i = 0; i < model.variables.size(); ++i) {
    out.columns.push_back(rename ? Code('C', i) : model.variables[i].name);
  }
  for (size_t i = 0; i < model.constraints.size(); ++i) {
    out.rows.push_back(rename ? Code('R', i) : model.constraints[i].name);
  }
  if (rename) {
    for (size_t i = 0; i < model.variables.size(); ++i) {
      out.sidecar += out.columns[i] + " " + model.variables[i].name + "\n";
    }
    for (size_t i = 0; i < model.constraints.size(); ++i) {
      out.sidecar += out.rows[i] + " " + model.constraints[i].name + "\n";
    }
  }
  return out;
}

// Accumulates tokens, wrapping long expressions onto indented lines.
class LineWriter {
 public:
  explicit LineWriter(std::string& out) : out_(out) {}

  void Start(const std::string& head) {
    out_ += head;
    width_ = head.size();
  }
  void Token(const std::string& token) {
    if (width_ + 1 + token.size() > kLpLineWidth && width_ > 0) {
      out_ += "\n  ";
      width_ = 2;
    } else {
      out_ += ' ';
      ++width_;
    }
    out_ += token;
    width_ += token.size();
  }
  void End() {
    out_ += '\n';
    width_ = 0;
  }

 private:
  std::string& out_;
  size_t width_ = 0;
};

void WriteTerms(LineWriter& line, const std::vector<Term>& terms, const Names& names) {
  bool first = true;
  for (const Term& term : terms) {
    const double mag = std::fabs(term.coef);
    std::string token;
    if (term.coef < 0) {
      token = "- ";
    } else if (!first) {
      token = "+ ";
    }
    if (mag != 1.0) token += Shortest(mag) + " ";
    token += names.columns[term.var];
    line.Token(token);
    first = false;
  }
}

}  // namespace

ExportResult ExportLp(const ModelIR& model) {
  const Names names = MapNames(model, false, kLpNameLimit);
  std::string out;
  LineWriter line(out);
  out += "\\ cssnd model\n";
  out += "Minimize\n";
  line.Start(" obj:");
  if (model.objective.empty()) {
    line.Token("0");
  } else {
    WriteTerms(line, model.objective, names);
  }
  line.End();
  out += "Subject To\n";
  for (size_t r = 0; r < model.constraints.size(); ++r) {
    const Constraint& row = model.constraints[r];
    line.Start(" " + names.rows[r] + ":");
    if (row.terms.empty() && !model.variables.empty()) {
      line.Token("0 " + names.columns[0]);
    } else {
      WriteTerms(line, row.terms, names);
    }
    line.Token(SenseText(row.sense));
    line.Token(Shortest(row.rhs));
    line.End();
  }
  std::string bounds;
  std::vector<size_t> binaries;
  for (size_t i = 0; i < model.variables.size(); ++i) {
    const Variable& v = model.variables[i];
    if (v.kind == VarKind::kBinary) {
      binaries.push_back(i);
      continue;
    }
    const bool default_lower = v.lower == 0.0;
    const bool default_upper = std::isinf(v.upper) && v.upper > 0;
    if (default_lower && default_upper) continue;
    const std::string lower = std::isinf(v.lower) ? "-inf" : Shortest(v.lower);
    const std::string upper = std::isinf(v.upper) ? "+inf" : Shortest(v.upper);
    bounds += " " + lower + " <= " + names.columns[i] + " <= " + upper + "\n";
  }
  if (!bounds.empty()) out += "Bounds\n" + bounds;
  if (!binaries.empty()) {
    out += "Binaries\n";
    line.Start("");
    for (size_t i : binaries) line.Token(names.columns[i]);
    line.End();
  }
  out += "End\n";
  return ExportResult{std::move(out), names.sidecar};
}

ExportResult ExportMps(const ModelIR& model) {
  const Names names = MapNames(model, true, 8);
  std::vector<std::vector<std::pair<std::string, double>>> columns(model.variables.size());
  for (const Term& term : model.objective) columns[term.var].emplace_back("OBJ", term.coef);
  for (size_t r = 0; r < model.constraints.size(); ++r) {
    for (const Term& term : model.constraints[r].terms) {
      columns[term.var].emplace_back(names.rows[r], term.coef);
    }
  }
  auto pad = [](const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
  };
  auto entry = [&](const std::string& a, const std::string& b, double value) {
    return "    " + pad(a, 8) + "  " + pad(b, 8) + "  " + FixedWidth(value) + "\n";
  };

  std::string out = "NAME          CSSND\nROWS\n N  OBJ\n";
  for (size_t r = 0; r < model.constraints.size(); ++r) {
    const Sense sense = model.constraints[r].sense;
    const char* code = sense == Sense::kLe ? " L  " : sense == Sense::kGe ? " G  " : " E  ";
    out += code + names.rows[r] + "\n";
  }
  out += "COLUMNS\n";
  bool in_integer = false;
  int marker = 0;
  for (size_t i = 0; i < model.variables.size(); ++i) {
    const bool integer = model.variables[i].kind == VarKind::kBinary;
    if (integer != in_integer) {
      out += "    " + pad("M" + std::to_string(marker++), 8) + "  'MARKER'                 " +
             (integer ? "'INTORG'" : "'INTEND'") + "\n";
      in_integer = integer;
    }
    if (columns[i].empty()) out += entry(names.columns[i], "OBJ", 0.0);
    for (const auto& [row, coef] : columns[i]) out += entry(names.columns[i], row, coef);
  }
  if (in_integer) {
    out += "    " + pad("M" + std::to_string(marker), 8) + "  'MARKER'                 'INTEND'\n";
  }
  out += "RHS\n";
  for (size_t r = 0; r < model.constraints.size(); ++r) {
    if (model.constraints[r].rhs != 0.0) out += entry("RHS", names.rows[r], model.constraints[r].rhs);
  }
  out += "BOUNDS\n";
  for (size_t i = 0; i < model.variables.size(); ++i) {
    const Variable& v = model.variables[i];
    const std::string col = pad(names.columns[i], 8);
    if (v.kind == VarKind::kBinary) {
      out += " UP BND       " + col + "  1\n";
      continue;
    }
    if (std::isinf(v.lower) && v.lower < 0) {
      out += " MI BND       " + col + "\n";
    } else if (v.lower != 0.0) {
      out += " LO BND       " + col + "  " + FixedWidth(v.lower) + "\n";
    }
    if (!std::isinf(v.upper)) out += " UP BND       " + col + "  " + FixedWidth(v.upper) + "\n";
  }
  out += "ENDATA\n";
  return ExportResult{std::move(out), names.sidecar};
}

}  // namespace cssnd
