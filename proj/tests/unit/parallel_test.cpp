/*
 * Copyright 2026 The equisplit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "equisplit/parallel.hpp"

namespace equisplit {
namespace {

class ThreadsEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("EQUISPLIT_THREADS"); }
};

TEST_F(ThreadsEnv, WorkerCount) {
  unsetenv("EQUISPLIT_THREADS");
  EXPECT_EQ(worker_count(3), 3);
  EXPECT_GE(worker_count(0), 1);
  setenv("EQUISPLIT_THREADS", "2", 1);
  EXPECT_EQ(worker_count(8), 2);
  EXPECT_EQ(worker_count(1), 1);
  EXPECT_LE(worker_count(0), 2);
  setenv("EQUISPLIT_THREADS", "junk", 1);
  EXPECT_EQ(worker_count(5), 5);
  setenv("EQUISPLIT_THREADS", "0", 1);
  EXPECT_EQ(worker_count(5), 5);
}

TEST_F(ThreadsEnv, MapKeepsOrder) {
  std::vector<int> items(200);
  for (int i = 0; i < 200; ++i) items[static_cast<std::size_t>(i)] = i;
  for (int threads : {1, 2, 7}) {
    const auto out = parallel_map(items, [](int v) { return v * v; }, threads);
    ASSERT_EQ(out.size(), items.size());
    for (int i = 0; i < 200; ++i) EXPECT_EQ(out[static_cast<std::size_t>(i)], i * i);
  }
  EXPECT_TRUE(parallel_map(std::vector<int>{}, [](int v) { return v; }, 4).empty());
}

TEST_F(ThreadsEnv, LowestFailingIndexWins) {
  std::vector<int> items{0, 1, 2, 3, 4, 5, 6, 7};
  auto fn = [](int v) -> int {
    if (v == 3 || v == 6) throw std::runtime_error("item " + std::to_string(v));
    return v;
  };
  for (int threads : {1, 4}) {
    try {
      parallel_map(items, fn, threads);
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "item 3");
    }
  }
}

}  // namespace
}  // namespace equisplit
