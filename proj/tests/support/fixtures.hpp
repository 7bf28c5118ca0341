#pragma once

#include <string>

#include "tsaudit/tsjson.hpp"

#ifndef TSAUDIT_FIXTURE_DIR
#error "TSAUDIT_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(TSAUDIT_FIXTURE_DIR) + "/" + name;
}

inline tsaudit::TypeSpace load_fixture(const std::string& stem) {
  return tsaudit::parse_type_space(tsaudit::read_file(fixture_path(stem + ".tsjson")));
}

inline tsaudit::RationalVector q(const char* text) { return tsaudit::parse_rational_list(text); }

}  // namespace testing_support
