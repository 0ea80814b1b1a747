#include <set>

#include <gtest/gtest.h>

#include "cospec/canonical.hpp"
#include "cospec/enumerate.hpp"
#include "cospec/stream.hpp"

using namespace cospec;

TEST(Enumerate, ConnectedCounts) {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n).size(), expected[n]) << n;
}

TEST(Enumerate, ConnectedGraphsAreDistinctAndConnected) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> forms;
    for (const auto& g : enumerate_connected(n)) {
      EXPECT_EQ(g.order(), n);
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(forms.insert(canonical_form(g)).second);
    }
  }
}

TEST(Enumerate, ConnectedCodesAreSorted) {
  const auto codes = connected_graph6_codes(6);
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
}

TEST(Enumerate, ConnectedRange) {
  EXPECT_THROW(connected_graph6_codes(0), std::out_of_range);
  EXPECT_THROW(connected_graph6_codes(kMaxGeneratedOrder + 1), std::out_of_range);
}

TEST(Enumerate, TreeCounts) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741};
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(enumerate_trees(n).size(), expected[n]) << n;
}

TEST(Enumerate, TreesAreDistinctTrees) {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> forms;
    for (const auto& t : enumerate_trees(n)) {
      EXPECT_EQ(t.order(), n);
      EXPECT_EQ(t.edge_count(), n - 1);
      EXPECT_TRUE(is_connected(t));
      EXPECT_TRUE(forms.insert(canonical_form(t)).second);
    }
  }
}

TEST(Enumerate, FourVertexTrees) {
  std::set<std::string> forms;
  for (const auto& t : enumerate_trees(4)) forms.insert(canonical_form(t));
  EXPECT_EQ(forms, (std::set<std::string>{canonical_form(Graph::path(4)), canonical_form(Graph::star(3))}));
}

TEST(Enumerate, TreeRange) {
  EXPECT_THROW(FreeTreeGenerator(0), std::out_of_range);
  EXPECT_THROW(FreeTreeGenerator(21), std::out_of_range);
}

TEST(Stream, RejectsDisconnectedRecord) {
  GraphStream s = GraphStream::from_graphs({Graph::complete(3), Graph(3)}, 3);
  try {
    s.for_each([](const Graph&, std::size_t) {});
    FAIL();
  } catch (const StreamError& e) {
    EXPECT_EQ(e.record(), 2u);
  }
}

TEST(Stream, RejectsWrongOrder) {
  GraphStream s = GraphStream::from_graphs({Graph::complete(3), Graph::complete(4)}, 3);
  EXPECT_THROW(s.for_each([](const Graph&, std::size_t) {}), StreamError);
}

TEST(Stream, GeneratorStreamsCount) {
  GraphStream c = GraphStream::connected(6);
  c.for_each([](const Graph&, std::size_t) {});
  EXPECT_EQ(c.emitted(), 112u);
  GraphStream t = GraphStream::trees(10);
  t.for_each([](const Graph&, std::size_t) {});
  EXPECT_EQ(t.emitted(), 106u);
  EXPECT_TRUE(t.rewindable());
  EXPECT_FALSE(GraphStream::file("-").rewindable());
}
