// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bfa::parse {

namespace {

[[noreturn]] void fail(std::string_view text) {
  throw std::invalid_argument("bad complex literal: '" + std::string(text) + "'");
}

// one signed factor: number, number i, e^x, e^x i
struct Scan {
  double value = 0.0;
  bool imaginary = false;
  std::size_t consumed = 0;
};

Scan scan_factor(const std::string& s, std::size_t pos) {
  Scan out;
  std::size_t i = pos;
  double sign = 1.0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1.0;
    ++i;
  }
  if (i + 1 < s.size() && (s[i] == 'e' || s[i] == 'E') && s[i + 1] == '^') {
    i += 2;
    const char* start = s.c_str() + i;
    char* end = nullptr;
    double arg = std::strtod(start, &end);
    if (end == start) fail(s);
    i += static_cast<std::size_t>(end - start);
    out.value = sign * std::exp(arg);
  } else if (i < s.size() && (s[i] == 'i' || s[i] == 'I')) {
    out.value = sign;
    out.imaginary = true;
    out.consumed = i + 1 - pos;
    return out;
  } else {
    const char* start = s.c_str() + i;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) fail(s);
    i += static_cast<std::size_t>(end - start);
    out.value = sign * v;
  }
  if (i < s.size() && (s[i] == 'i' || s[i] == 'I')) {
    out.imaginary = true;
    ++i;
  }
  out.consumed = i - pos;
  return out;
}

}  // namespace

std::complex<double> complex_literal(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(text);

  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  int parts = 0;
  while (pos < s.size()) {
    if (parts >= 2) fail(text);
    Scan f = scan_factor(s, pos);
    if (f.consumed == 0) fail(text);
    (f.imaginary ? im : re) += f.value;
    pos += f.consumed;
    ++parts;
  }
  if (parts == 0) fail(text);
  return {re, im};
}

std::vector<std::complex<double>> point_list(std::string_view text) {
  std::vector<std::complex<double>> out;
  std::size_t pos = 0;
  const std::string s(text);
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) out.push_back(complex_literal(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("bad point: '" + std::string(text) + "'");
  return out;
}

}  // namespace bfa::parse
