// Copyright 2026 The Authors.
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


#include "matroids/verify.hpp"

#include <string>

#include "gtest/gtest.h"

namespace matroids {
namespace {

TEST(VerifyTest, ReportsAreDeterministic) {
  for (const std::string name : {"growth-rates", "isomorphisms"}) {
    const SuiteReport a = run_suite(name);
    const SuiteReport b = run_suite(name);
    EXPECT_EQ(a.status(), CheckStatus::kPass) << format_report(a);
    EXPECT_EQ(format_report(a), format_report(b));
    EXPECT_FALSE(a.records.empty());
    for (std::size_t i = 1; i < a.records.size(); ++i) {
      EXPECT_LT(a.records[i - 1].claim, a.records[i].claim);
    }
  }
}

TEST(VerifyTest, ParallelWorkersGiveTheSameReport) {
  VerifyOptions serial;
  VerifyOptions parallel;
  parallel.workers = 4;
  parallel.minor.workers = 4;
  EXPECT_EQ(format_report(run_suite("memberships", serial)),
            format_report(run_suite("memberships", parallel)));
}

TEST(VerifyTest, ReportLayout) {
  const std::string text = format_report(run_suite("growth-rates"));
  EXPECT_EQ(text.rfind("suite growth-rates\ntoolchain matroids ", 0), 0u);
  EXPECT_NE(text.find("01.01  pass  ["), std::string::npos);
  EXPECT_EQ(text.find("seconds"), std::string::npos);
}

TEST(VerifyTest, UnknownSuite) {
  EXPECT_THROW(run_suite("everything"), DomainError);
  EXPECT_EQ(suite_names().size(), 8u);
}

TEST(VerifyTest, RecorderStatuses) {
  detail::Recorder rec(42);
  rec.check("a", "", [] { return detail::Outcome{true, "x", "x"}; });
  rec.check("b", "", [] { return detail::Outcome{false, "x", "y"}; });
  rec.check("c", "", []() -> detail::Outcome {
    throw ResourceError("too big");
  });
  rec.check("d", "", []() -> detail::Outcome { throw DomainError("bad"); });
  const auto records = rec.take();
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].claim, "42.01");
  EXPECT_EQ(records[0].status, CheckStatus::kPass);
  EXPECT_EQ(records[1].status, CheckStatus::kFail);
  EXPECT_EQ(records[2].status, CheckStatus::kSkipped);
  EXPECT_EQ(records[3].status, CheckStatus::kFail);
  EXPECT_EQ(records[3].computed, "error: bad");
  EXPECT_STREQ(status_name(CheckStatus::kSkipped), "skipped (resource)");

  SuiteReport report;
  report.records = records;
  EXPECT_EQ(report.status(), CheckStatus::kFail);
  report.records = {records[0], records[2]};
  EXPECT_EQ(report.status(), CheckStatus::kSkipped);
}

}  // namespace
}  // namespace matroids
