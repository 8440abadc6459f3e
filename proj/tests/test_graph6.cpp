#include <qgl/enumerate.hpp>
#include <qgl/families.hpp>
#include <qgl/graph6.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace qgl;

namespace {

// Straightforward bit-string encoder used as an oracle for the library.
std::string reference_encode(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  }
  while (bits.size() % 6) bits.push_back('0');
  std::string out(1, static_cast<char>(g.order() + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    out.push_back(static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63));
  }
  return out;
}

Errc error_of(std::string_view text) {
  try {
    decode_graph6(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return Errc::io;
}

}  // namespace

TEST(Graph6, DecodeExamples) {
  EXPECT_EQ(decode_graph6("A_"), families::complete(2));
  EXPECT_EQ(decode_graph6("C~"), families::complete(4));
  const Graph empty = decode_graph6("B?");
  EXPECT_EQ(empty.order(), 3);
  EXPECT_EQ(empty.edge_count(), 0);
}

TEST(Graph6, EncodeExamples) {
  EXPECT_EQ(encode_graph6(families::complete(2)), "A_");
  EXPECT_EQ(encode_graph6(families::complete(4)), "C~");
  EXPECT_EQ(encode_graph6(Graph(2)), "A?");
  EXPECT_EQ(encode_graph6(Graph(3)), "B?");
}

TEST(Graph6, ColumnMajorBitOrder) {
  // Only x(0,2), the second bit, is set: 010000 -> 16 + 63.
  const Graph g = decode_graph6(std::string("B") + static_cast<char>(16 + 63));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(Graph6, Errors) {
  EXPECT_EQ(error_of(""), Errc::truncated_record);
  EXPECT_EQ(error_of("C"), Errc::truncated_record);
  EXPECT_EQ(error_of("C!"), Errc::malformed_record);
  EXPECT_EQ(error_of(std::string("C") + static_cast<char>(127)), Errc::malformed_record);
  EXPECT_EQ(error_of("R???????????????????????????"), Errc::unsupported_size);
  EXPECT_EQ(error_of("C~~"), Errc::malformed_record);
}

TEST(Graph6, PadBitsAreIgnored) {
  // K2 with the five pad bits set still decodes as K2.
  EXPECT_EQ(decode_graph6("A~"), families::complete(2));
}

TEST(Graph6, MatchesReferenceEncoderAndRoundTrips) {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const std::string text = encode_graph6(g);
      ASSERT_EQ(text, reference_encode(g));
      ASSERT_EQ(decode_graph6(text), g);
    }
  }
}

TEST(Graph6, SixteenVertices) {
  const Graph g = families::cycle(16);
  EXPECT_EQ(encode_graph6(g), reference_encode(g));
  EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
}

TEST(Graph6, FileIsReproducedByteForByte) {
  const std::string path = std::string(QGL_FIXTURE_DIR) + "/graph6c.g6";
  std::ifstream in(path);
  std::stringstream original;
  original << in.rdbuf();
  const auto graphs = read_graph6_file(path);
  ASSERT_EQ(graphs.size(), 112u);
  EXPECT_EQ(graphs.front().id, 1u);
  EXPECT_EQ(graphs.back().id, 112u);
  std::ostringstream written;
  write_graph6(written, graphs);
  EXPECT_EQ(written.str(), original.str());
}

TEST(Graph6, ReaderSkipsCarriageReturns) {
  std::istringstream in("A_\r\nC~\r\n");
  const auto graphs = read_graph6(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[1], families::complete(4));
}
