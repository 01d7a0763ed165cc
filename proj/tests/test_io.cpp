#include <doctest.h>

#include <sstream>

#include "qshell/errors.hpp"
#include "qshell/io.hpp"

using namespace qshell;

namespace {

// The line number carried in a ParseError message, or -1.
int error_line(const std::string& text, std::size_t cap = kDefaultMaxSubspaces, bool rank_table = false) {
  std::istringstream in(text);
  try {
    if (rank_table)
      parse_rank_table(in, cap);
    else
      parse_subspace_list(in);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    const auto pos = msg.find("line ");
    if (pos == std::string::npos) return 0;
    return std::stoi(msg.substr(pos + 5));
  }
  return -1;
}

Vector vec(std::initializer_list<int> xs) {
  std::vector<Elem> e;
  for (int x : xs) e.push_back(static_cast<Elem>(x));
  return Vector(std::move(e));
}

}  // namespace

TEST_CASE("subspace lists parse spanning sets") {
  std::istringstream in(
      "# two planes and a zero block\n"
      "q=2 n=3\n"
      "\n"
      "1 1 0\n"
      "0 1 0\n"
      "1 0 0\n"
      "\n"
      "0 0 1\n"
      "0 1 0   # trailing comment\n"
      "\n"
      "0 0 0\n");
  const auto list = parse_subspace_list(in);
  CHECK(list.ambient == Ambient(2, 3));
  REQUIRE(list.subspaces.size() == 3);
  CHECK(list.subspaces[0] == list.ambient.span(std::vector<Vector>{vec({1, 0, 0}), vec({0, 1, 0})}));
  CHECK(list.subspaces[1].dim() == 2);
  CHECK(list.subspaces[2].is_zero());
}

TEST_CASE("subspace lists round-trip") {
  const Ambient amb(4, 3);
  auto subs = enumerate_grassmannian(amb, 2);
  subs.resize(12);
  subs.push_back(amb.zero());
  subs.push_back(amb.full());
  std::ostringstream out;
  write_subspace_list(out, amb, subs);
  std::istringstream in(out.str());
  const auto back = parse_subspace_list(in);
  CHECK(back.ambient == amb);
  CHECK(back.subspaces == subs);
}

TEST_CASE("subspace list parse errors carry line numbers") {
  CHECK(error_line("") == 0);
  CHECK(error_line("q=6 n=3\n") == 1);
  CHECK(error_line("q=2 n=0\n") == 1);
  CHECK(error_line("n=3\n") == 1);
  CHECK(error_line("q=2 n=3\n1 0 0\n1 0\n") == 3);
  CHECK(error_line("q=2 n=3\n1 0 2\n") == 2);
  CHECK(error_line("q=2 n=3\n\n\n1 x 0\n") == 4);
  CHECK(error_line("q=2 n=3\n1 0 0\n") == -1);
  CHECK_THROWS_AS(read_subspace_list("/nonexistent/file"), ParseError);
}

TEST_CASE("rank tables round-trip") {
  for (auto [k, n, q] : std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {1, 2, 3}, {3, 4, 2}, {2, 2, 4}}) {
    const auto m = uniform_matroid(k, n, q);
    std::ostringstream out;
    write_rank_table(out, m);
    std::istringstream in(out.str());
    CHECK(parse_rank_table(in) == m);
  }
}

TEST_CASE("rank tables accept any line order and non-echelon rows") {
  std::istringstream in(
      "q=2 n=2\n"
      "1,1;0,1 | 2\n"
      "0 | 0\n"
      "1,1 | 1\n"
      "0,1 | 1\n"
      "1,0 | 1\n");
  const auto m = parse_rank_table(in);
  CHECK(m == uniform_matroid(2, 2, 2));
}

TEST_CASE("rank table parse errors") {
  const std::string head = "q=2 n=2\n";
  const std::string body = "0 | 0\n1,0 | 1\n0,1 | 1\n1,1 | 1\n";
  CHECK(error_line(head + body + "1,0;0,1 | 2\n", kDefaultMaxSubspaces, true) == -1);
  // missing subspace
  CHECK(error_line(head + body, kDefaultMaxSubspaces, true) >= 0);
  // duplicate
  CHECK(error_line(head + body + "0,1 | 1\n", kDefaultMaxSubspaces, true) == 6);
  // dependent rows
  CHECK(error_line(head + "1,1;1,1 | 2\n", kDefaultMaxSubspaces, true) == 2);
  // missing bar, bad rank
  CHECK(error_line(head + "1,0 1\n", kDefaultMaxSubspaces, true) == 2);
  CHECK(error_line(head + "1,0 | x\n", kDefaultMaxSubspaces, true) == 2);
  CHECK(error_line(head + "1,0 | -1\n", kDefaultMaxSubspaces, true) == 2);
  CHECK(error_line(head + "1,0,1 | 1\n", kDefaultMaxSubspaces, true) == 2);
  std::istringstream big("q=2 n=6\n");
  CHECK_THROWS_AS(parse_rank_table(big, 100), ResourceCapExceeded);
}

TEST_CASE("compact formats") {
  const Ambient amb(3, 3);
  CHECK(format_subspace(amb.zero()) == "0");
  CHECK(format_subspace(amb.span(std::vector<Vector>{vec({1, 0, 2}), vec({0, 1, 1})})) == "1,0,2;0,1,1");
  CHECK(format_vector(vec({2, 0, 1})) == "2,0,1");
}
