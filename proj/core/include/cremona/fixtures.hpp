// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

// A frozen involution used by the CLI and the test corpus.
struct Fixture {
  std::string name;
  Field field;
  ProjectiveLinearMap alpha;
  std::string comment;
};

// identity, swap-xy, the searched prime-field instances with prescribed
// orbit profiles, and the 40-general F_1009 instance
const std::vector<Fixture>& builtin_fixtures();
std::optional<Fixture> fixture_by_name(const std::string& name);

// {"field":"q"|"fp:<p>","alpha":[9 coefficient strings, row major]}
Fixture parse_fixture_json(const std::string& text, const std::string& name = "file");

// "a,b,c;d,e,f;g,h,i" with entries in the field's scalar syntax
ProjectiveLinearMap parse_alpha_inline(const Field& f, const std::string& text);

Field parse_field(const std::string& text);  // "q" or "fp:<p>"

}  // namespace cremona
