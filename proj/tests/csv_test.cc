// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "labeldp/csv.h"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "labeldp/pipeline.h"
#include "labeldp/status.h"

namespace labeldp {
namespace {

using ::testing::ElementsAre;

TEST(CsvTest, ParsesQuotedFields) {
  auto table = ParseCsv("a,b,\"c,d\"\n1,\"x \"\"y\"\"\",\"multi\nline\"\n");
  ASSERT_TRUE(table.ok()) << table.status();
  EXPECT_THAT(table->header.values, ElementsAre("a", "b", "c,d"));
  ASSERT_EQ(table->records.size(), 1u);
  EXPECT_THAT(table->records[0].values,
              ElementsAre("1", "x \"y\"", "multi\nline"));
  EXPECT_EQ(table->records[0].raw[1], "\"x \"\"y\"\"\"");
  EXPECT_EQ(*table->ColumnIndex("c,d"), 2u);
  EXPECT_FALSE(table->ColumnIndex("z").ok());
}

TEST(CsvTest, RejectsMalformedInput) {
  EXPECT_FALSE(ParseCsv("").ok());
  EXPECT_FALSE(ParseCsv("a,b\n1\n").ok());
  EXPECT_FALSE(ParseCsv("a\n\"open\n").ok());
  EXPECT_FALSE(ParseCsv("a\nx\"y\n").ok());
  EXPECT_FALSE(ParseCsv("a\n\"x\"y\n").ok());
}

TEST(CsvTest, UnchangedRenderIsByteIdentical) {
  for (const std::string text :
       {std::string("id,label,note\r\n1,0.5,\"a, b\"\r\n2,0.25,plain\r\n"),
        std::string("label\n0.1\n0.2"), std::string("x,label\n\"q\",1\n")}) {
    auto table = ParseCsv(text);
    ASSERT_TRUE(table.ok()) << text;
    const size_t label = *table->ColumnIndex("label");
    auto dataset = DatasetFromCsv(*table, label);
    ASSERT_TRUE(dataset.ok());
    std::vector<double> labels = dataset->Labels();
    auto rendered = RenderCsvWithLabels(*table, label, labels, false);
    ASSERT_TRUE(rendered.ok());
    EXPECT_EQ(*rendered, text);
  }
}

TEST(CsvTest, ReplacesOnlyTheLabelColumn) {
  const std::string text = "id,label,note\n7,0.5,\"a,b\"\n8,0.25,c\n";
  auto table = ParseCsv(text);
  ASSERT_TRUE(table.ok());
  auto rendered = RenderCsvWithLabels(*table, 1, std::vector<double>{0.1, -2},
                                      false);
  EXPECT_EQ(*rendered, "id,label,note\n7,0.1,\"a,b\"\n8,-2,c\n");
  auto kept = RenderCsvWithLabels(*table, 1, std::vector<double>{0.1, -2}, true);
  EXPECT_EQ(*kept,
            "id,label,note,label_original\n7,0.1,\"a,b\",0.5\n8,-2,c,0.25\n");
  EXPECT_TRUE(HasErrorTag(
      RenderCsvWithLabels(*table, 1, std::vector<double>{0.1}, false).status(),
      error_tag::kLengthMismatch));
}

TEST(CsvTest, DatasetFeaturesAreRawFields) {
  auto table = ParseCsv("a,label,b\n\"x,1\",3.5,y\n");
  auto dataset = DatasetFromCsv(*table, 1);
  ASSERT_TRUE(dataset.ok());
  EXPECT_EQ(dataset->rows[0].features, "\"x,1\",y");
  EXPECT_EQ(dataset->rows[0].label, 3.5);
  EXPECT_FALSE(DatasetFromCsv(*ParseCsv("label\nabc\n"), 0).ok());
  EXPECT_FALSE(DatasetFromCsv(*ParseCsv("label\nnan\n"), 0).ok());
  EXPECT_FALSE(DatasetFromCsv(*table, 3).ok());
}

TEST(CsvTest, NumericFeatures) {
  auto table = ParseCsv("a,label,b\n1,0,2\n3,1, 4 \n");
  auto features = NumericFeaturesFromCsv(*table, 1);
  ASSERT_TRUE(features.ok());
  EXPECT_THAT((*features)[1], ElementsAre(3.0, 4.0));
  EXPECT_FALSE(NumericFeaturesFromCsv(*ParseCsv("a,label\nx,1\n"), 1).ok());
}

TEST(CsvTest, FormatDoubleRoundTrips) {
  std::mt19937_64 engine(1);
  std::uniform_real_distribution<double> unit(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = unit(engine) * std::pow(10.0, i % 40 - 20);
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
  EXPECT_EQ(FormatDouble(0.5), "0.5");
  EXPECT_EQ(QuoteCsvField("plain"), "plain");
  EXPECT_EQ(QuoteCsvField("a\"b"), "\"a\"\"b\"");
}

}  // namespace
}  // namespace labeldp
