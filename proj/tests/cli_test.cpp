// Copyright 2026 The tsirelson-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Drives the tsirelson_lab binary through a shell and checks exit codes and
// the JSON it prints.

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct Run {
  int code = -1;
  std::string out;
};

Run lab(const std::string& args) {
  const std::string cmd = std::string(TSIRELSON_LAB_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

TEST(Cli, NormExamples) {
  auto r = lab("norm --theta 1/2 --alpha 1 --vec 3:1,4:1,5:1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["norm"], "3/2");
  r = lab("norm --theta 1/2 --alpha 2 --vec 2:1,3:1,4:1,5:1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["norm"], "2");
}

TEST(Cli, NormWitnessAndIterates) {
  const auto r = lab("norm --vec 3:1,4:1,5:1 --witness --iterates 2");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["witness"]["minima"], Json::parse("[3,4,5]"));
  EXPECT_EQ(j["iterates"], Json::parse(R"(["1","3/2","3/2"])"));
  EXPECT_EQ(lab("witness --vec 3:1,4:1,5:1").code, 0);
}

TEST(Cli, InputErrorsExitTwoWithoutOutput) {
  for (const char* args : {"norm --theta 3/4 --vec 1:1", "norm --vec 0:1", "norm --vec 1:x", "norm --alpha q --vec 1:1",
                           "schreier member --set 3,2", "bogus", "isometry --map perm=1,1 --vec 1:1",
                           "verify --suite nope"}) {
    const auto r = lab(args);
    EXPECT_EQ(r.code, 2) << args;
    EXPECT_TRUE(r.out.empty()) << args;
  }
}

TEST(Cli, SchreierExamples) {
  auto r = lab("schreier member --alpha 2 --set 2,4,5,6,7");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["member"], true);
  r = lab("schreier member --alpha w --set 1,2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["member"], false);
  r = lab("schreier maximal --alpha 1 --start 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["set"], Json::parse("[3,4,5]"));
  r = lab("schreier enum --alpha 1 --max 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["count"], 5);  // {}, {1}, {2}, {3}, {2,3}
  EXPECT_EQ(lab("schreier regular --alpha w --max 9").code, 0);
}

TEST(Cli, IsometryExitCodes) {
  EXPECT_EQ(lab("isometry --map perm=2,1 --theta 1/2 --alpha 1").code, 0);
  const auto r = lab("isometry --map perm=2,1 --theta 1/2 --alpha 2 --vec 2:1,3:1,4:1,5:1");
  ASSERT_EQ(r.code, 1);
  const auto j = json_of(r);
  EXPECT_EQ(j["counterexample"]["lhs"], "3/2");
  EXPECT_EQ(j["counterexample"]["rhs"], "2");
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(lab("verify --theta 1/2 --alpha 1 --suite isometry").code, 0);
  const auto r = lab("verify --theta 2/5 --alpha 1 --suite isometry");
  ASSERT_EQ(r.code, 0);
  bool found = false;
  const auto j = json_of(r);
  for (auto& ce : j["counterexamples"])
    if (ce["lhs"] == "6/5") found = true;
  EXPECT_TRUE(found);
  EXPECT_EQ(lab("verify --theta 1/2 --alpha 2 --suite lemmas").code, 0);
  EXPECT_EQ(lab("verify --theta 1/3 --alpha 1 --suite oracle --bound 5").code, 0);
}

TEST(Cli, OracleSingleVector) {
  const auto r = lab("oracle --theta 1/2 --alpha 2 --vec 2:1,3:1,4:1,5:1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["brute_force"], "2");
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "verify --theta 1/2 --alpha w --suite lemmas --seed 9 --count 5";
  const auto a = lab(args);
  const auto b = lab(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
