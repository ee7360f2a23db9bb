// Copyright 2026 The Toonskin Authors. All Rights Reserved.
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

#include "toonskin/corpus.hpp"

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "toonskin/errors.hpp"
#include "toonskin/image_io.hpp"

namespace toonskin {
namespace {

using testing::TempDir;
using testing::write_text;

TEST(DiscoverCorpus, PairsByGtSuffix) {
  TempDir dir;
  const RasterImage img(4, 4, {10, 20, 30});
  write_image(dir / "b.png", img);
  write_image(dir / "b.gt.png", img);
  write_image(dir / "a.png", img);
  write_image(dir / "a.gt.png", img);
  write_image(dir / "lonely.png", img);
  write_text(dir / "notes.txt", "ignored");

  const CorpusManifest m = discover_corpus(dir.path());
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.entries[0].original.filename(), "a.png");
  EXPECT_EQ(m.entries[0].annotated->filename(), "a.gt.png");
  EXPECT_EQ(m.entries[1].original.filename(), "b.png");
  EXPECT_EQ(m.entries[2].original.filename(), "lonely.png");
  EXPECT_FALSE(m.entries[2].annotated.has_value());

  try {
    load_corpus(m);
    FAIL();
  } catch (const InvalidPairError& e) {
    EXPECT_NE(std::string(e.what()).find("lonely.png"), std::string::npos);
  }
}

TEST(DiscoverCorpus, MirroredDirectoryAndOtherExtension) {
  TempDir dir;
  std::filesystem::create_directories(dir / "orig");
  std::filesystem::create_directories(dir / "gt");
  const RasterImage img(4, 4, {10, 20, 30});
  write_image(dir / "orig/x.jpg", img);
  write_image(dir / "gt/x.gt.png", img);
  const CorpusManifest m = discover_corpus(dir / "orig", dir / "gt");
  ASSERT_EQ(m.entries.size(), 1u);
  ASSERT_TRUE(m.entries[0].annotated.has_value());
  EXPECT_EQ(m.entries[0].annotated->filename(), "x.gt.png");
  const auto pairs = load_corpus(m);
  EXPECT_EQ(pairs[0].name, "x.jpg");
}

TEST(DiscoverCorpus, MissingDirectory) {
  EXPECT_THROW(discover_corpus("/nonexistent/toonskin"), IoError);
}

TEST(ReadManifest, CommentsBlankLinesAndRelativePaths) {
  TempDir dir;
  write_text(dir / "list.txt",
             "# corpus\n"
             "\n"
             "one.png, one.gt.png  # trailing comment\n"
             "/abs/two.png\n"
             "three.png,\n");
  const CorpusManifest m = read_manifest(dir / "list.txt");
  ASSERT_EQ(m.entries.size(), 3u);
  EXPECT_EQ(m.entries[0].original, dir / "one.png");
  EXPECT_EQ(*m.entries[0].annotated, dir / "one.gt.png");
  EXPECT_EQ(m.entries[1].original, "/abs/two.png");
  EXPECT_FALSE(m.entries[1].annotated.has_value());
  EXPECT_FALSE(m.entries[2].annotated.has_value());
}

TEST(ReadManifest, RejectsDuplicatesAndExtraFields) {
  TempDir dir;
  write_text(dir / "dup.txt", "a.png,a.gt.png\n./a.png,b.gt.png\n");
  EXPECT_THROW(read_manifest(dir / "dup.txt"), ParseError);
  write_text(dir / "three.txt", "a.png,b.png,c.png\n");
  EXPECT_THROW(read_manifest(dir / "three.txt"), ParseError);
  EXPECT_THROW(read_manifest(dir / "missing.txt"), IoError);
}

TEST(LoadCorpus, DecodeFailureNamesFile) {
  TempDir dir;
  write_image(dir / "a.png", RasterImage(3, 3));
  write_text(dir / "a.gt.png", "not an image");
  try {
    load_corpus(discover_corpus(dir.path()));
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("a.gt.png"), std::string::npos);
  }
}

}  // namespace
}  // namespace toonskin
