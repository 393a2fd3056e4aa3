// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include "cremona/fixtures.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cremona {

namespace {

ProjectiveLinearMap map_from_longs(const Field& f, const std::array<long, 9>& m) {
  std::array<std::array<Scalar, 3>, 3> a{{
      {Scalar::from_int(f, m[0]), Scalar::from_int(f, m[1]), Scalar::from_int(f, m[2])},
      {Scalar::from_int(f, m[3]), Scalar::from_int(f, m[4]), Scalar::from_int(f, m[5])},
      {Scalar::from_int(f, m[6]), Scalar::from_int(f, m[7]), Scalar::from_int(f, m[8])},
  }};
  return ProjectiveLinearMap(a);
}

std::vector<Fixture> make_builtins() {
  std::vector<Fixture> out;
  Field q = Field::rationals();
  out.push_back({"identity", q, ProjectiveLinearMap::identity(q),
                 "alpha = 1, so g is the standard quadratic involution"});
  out.push_back({"swap-xy", q, map_from_longs(q, {0, 1, 0, 1, 0, 0, 0, 0, 1}),
                 "alpha exchanges two base points"});
  // reflection with u=(1,1,1), w=(1,1,3); orbit stays in general position
  // through at least five steps and deg(g^n) = 2^n for n <= 3
  out.push_back({"q-general3", q,
                 parse_alpha_inline(q, "1,-2/3,-2;-2/3,1,-2;-2/3,-2/3,-1/3"),
                 "P:AtLeast(5) Q:AtLeast(5) R:AtLeast(5)"});
  // searched instances are appended by generated_fixtures()
  return out;
}

}  // namespace

// defined in fixtures_generated.cpp once the search has been frozen
void append_generated_fixtures(std::vector<Fixture>& out);

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out = make_builtins();
    append_generated_fixtures(out);
    return out;
  }();
  return fixtures;
}

std::optional<Fixture> fixture_by_name(const std::string& name) {
  for (const auto& f : builtin_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    unsigned long long p = std::stoull(text.substr(3));
    return Field::prime(p);
  }
  throw std::invalid_argument("field must be \"q\" or \"fp:<p>\"");
}

Fixture parse_fixture_json(const std::string& text, const std::string& name) {
  nlohmann::json j = nlohmann::json::parse(text);
  Field f = parse_field(j.at("field").get<std::string>());
  const auto& arr = j.at("alpha");
  if (!arr.is_array() || arr.size() != 9)
    throw std::invalid_argument("alpha must be a 9-element array");
  std::array<std::array<Scalar, 3>, 3> m{{
      {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)},
      {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)},
      {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)},
  }};
  for (int i = 0; i < 9; ++i) {
    std::string s = arr[i].is_string() ? arr[i].get<std::string>()
                                       : arr[i].dump();
    m[i / 3][i % 3] = Scalar::parse(f, s);
  }
  return {name, f, ProjectiveLinearMap(m), "parsed from file"};
}

ProjectiveLinearMap parse_alpha_inline(const Field& f, const std::string& text) {
  std::array<std::array<Scalar, 3>, 3> m{{
      {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)},
      {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)},
      {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)},
  }};
  std::istringstream rows(text);
  std::string row;
  int i = 0;
  while (std::getline(rows, row, ';')) {
    if (i >= 3) throw std::invalid_argument("expected 3 rows");
    std::istringstream cells(row);
    std::string cell;
    int j = 0;
    while (std::getline(cells, cell, ',')) {
      if (j >= 3) throw std::invalid_argument("expected 3 entries per row");
      m[i][j] = Scalar::parse(f, cell);
      ++j;
    }
    if (j != 3) throw std::invalid_argument("expected 3 entries per row");
    ++i;
  }
  if (i != 3) throw std::invalid_argument("expected 3 rows");
  return ProjectiveLinearMap(m);
}

}  // namespace cremona
