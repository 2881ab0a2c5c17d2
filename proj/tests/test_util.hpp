#pragma once

#include <catch2/catch_amalgamated.hpp>
#include <string>

#include "ffrace/errors.hpp"

namespace ffrace {

struct ErrcMatcher : Catch::Matchers::MatcherBase<error> {
  errc expected;
  explicit ErrcMatcher(errc c) : expected(c) {}
  bool match(const error& e) const override { return e.code() == expected; }
  std::string describe() const override {
    return std::string("has error code ") + errc_name(expected);
  }
};

}  // namespace ffrace
