// Copyright 2026 The cicy-invariants Authors
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

#include "cicy/cli.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace
{
namespace fs = std::filesystem;
using cicy::testing::data_dir;

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = cicy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path & path)
{
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count_lines(const std::string & text)
{
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class CliTest : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("cicy_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string & name, const std::string & content)
  {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
  }

  std::string sample() const { return (data_dir() / "sample.json").string(); }
  std::string hodge() const { return (data_dir() / "sample_hodge.csv").string(); }

  fs::path dir_;
};

TEST_F(CliTest, ComputeWritesOneRowPerRecord)
{
  const auto out = dir_ / "inv.csv";
  const auto r = run({"compute", "--in", sample(), "--hodge", hodge(), "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(out);
  EXPECT_EQ(count_lines(csv), 3u);
  EXPECT_NE(csv.find("quintic,1,1,1,101,true,5,5,5,50,-200,(1 1 1):5,50\n"), std::string::npos);
  EXPECT_NE(r.out.find("records=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("favorable=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("buckets=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("seconds="), std::string::npos);
}

TEST_F(CliTest, MissingInputIsUsageError)
{
  const auto r = run({"compute", "--in", (dir_ / "missing.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.json"), std::string::npos);
}

TEST_F(CliTest, BadFlagsAreUsageErrors)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", "--in", sample(), "--workers", "0"}).code, 2);
  EXPECT_EQ(run({"compute", "--in", sample(), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"features", "--in", sample(), "--out", "x.csv", "--frame", "12"}).code, 2);
  EXPECT_EQ(run({"classify", "--in", sample(), "--convention", "other"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, WorkerCountDoesNotChangeOutput)
{
  const auto one = dir_ / "one.csv";
  const auto eight = dir_ / "eight.csv";
  ASSERT_EQ(run({"compute", "--in", sample(), "--workers", "1", "--out", one.string()}).code, 0);
  ASSERT_EQ(run({"compute", "--in", sample(), "--workers", "8", "--out", eight.string()}).code, 0);
  EXPECT_EQ(slurp(one), slurp(eight));
}

TEST_F(CliTest, JsonExportRoundTripsThroughCompute)
{
  const auto first = dir_ / "a.json";
  const auto second = dir_ / "b.json";
  ASSERT_EQ(
    run({"compute", "--in", sample(), "--hodge", hodge(), "--format", "json", "--out",
         first.string()})
      .code,
    0);
  ASSERT_EQ(run({"compute", "--in", first.string(), "--format", "json", "--out", second.string()}).code, 0);
  EXPECT_EQ(slurp(first), slurp(second));
}

TEST_F(CliTest, ComputeReportsMalformedRecords)
{
  const auto input = write(
    "mixed.jsonl",
    "{\"id\":\"quintic\",\"ambient\":[4],\"degrees\":[[5]]}\n"
    "{\"id\":\"bad\",\"ambient\":[4],\"degrees\":[[4]]}\n");
  const auto r = run({"compute", "--in", input.string(), "--out", (dir_ / "o.csv").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad: invalid configuration"), std::string::npos);
  EXPECT_EQ(count_lines(slurp(dir_ / "o.csv")), 3u);
}

TEST_F(CliTest, FeaturesForSample)
{
  const auto out = dir_ / "features.csv";
  const auto r = run({"features", "--in", sample(), "--hodge", hodge(), "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(slurp(out)), 2u);
  EXPECT_EQ(slurp(dir_ / "features_labels.csv"), "5,5,5,50\n3,3,18,36\n");
  EXPECT_NE(slurp(dir_ / "features_manifest.json").find("\"convention\": \"literal\""), std::string::npos);
}

TEST_F(CliTest, FeaturesForEmptyCorpus)
{
  const auto input = write("empty.json", "[]\n");
  const auto out = dir_ / "features.csv";
  const auto r = run({"features", "--in", input.string(), "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(out), "");
  EXPECT_EQ(slurp(dir_ / "features_labels.csv"), "");
}

TEST_F(CliTest, FeaturesFrameOverflow)
{
  const auto out = dir_ / "features.csv";
  const auto r = run(
    {"features", "--in", (data_dir() / "sample.json").string(), "--out", out.string(), "--frame",
     "1x1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bicubic: FrameOverflow"), std::string::npos);
  EXPECT_EQ(slurp(out), "5\n");
}

TEST_F(CliTest, ClassifySample)
{
  const auto hist = dir_ / "hist.csv";
  const auto r = run({"classify", "--in", sample(), "--hodge", hodge(), "--out", hist.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("buckets=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("bucket_size=1 count=2\n"), std::string::npos);
  EXPECT_EQ(slurp(hist), "bucket_size,count\n1,2\n");
}

TEST_F(CliTest, ClassifyDuplicatedRecord)
{
  const auto input = write(
    "dup.jsonl",
    "{\"id\":\"a\",\"ambient\":[4],\"degrees\":[[5]],\"h11\":1,\"h21\":101}\n"
    "{\"id\":\"b\",\"ambient\":[4],\"degrees\":[[5]],\"h11\":1,\"h21\":101}\n");
  const auto r = run({"classify", "--in", input.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("buckets=1\n"), std::string::npos);
  EXPECT_NE(r.out.find("bucket_size=2 count=1\n"), std::string::npos);
}

TEST_F(CliTest, ClassifyWithoutHodgeFails)
{
  const auto r = run({"classify", "--in", sample()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no Hodge numbers"), std::string::npos);
}

TEST_F(CliTest, CheckSampleHasNoViolations)
{
  const auto r = run({"check", "--in", sample(), "--hodge", hodge()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("violations=0\n"), std::string::npos);
}

TEST_F(CliTest, CheckFlagsCorruptedHodge)
{
  const auto bad = write("hodge.csv", "id,h11,h21\nquintic,1,100\nbicubic,2,83\n");
  const auto r = run({"check", "--in", sample(), "--hodge", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violations=1\n"), std::string::npos);
  EXPECT_NE(r.err.find("quintic: Euler characteristic -200 != 2(h11 - h21) = -198"), std::string::npos);
}

TEST_F(CliTest, CheckEmptyCorpus)
{
  const auto input = write("empty.txt", "");
  const auto r = run({"check", "--in", input.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("records=0\n"), std::string::npos);
  EXPECT_NE(r.out.find("violations=0\n"), std::string::npos);
}

TEST_F(CliTest, DuplicateHodgeIdIsRecordError)
{
  const auto bad = write("hodge.csv", "id,h11,h21\nquintic,1,101\nquintic,1,101\n");
  const auto r = run({"compute", "--in", sample(), "--hodge", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("duplicate id"), std::string::npos);
}

}  // namespace
