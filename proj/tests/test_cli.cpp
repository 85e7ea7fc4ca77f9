#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidwp/braid.hpp"
#include "braidwp/cli.hpp"

using namespace braidwp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eq") {
  auto r = run({"--strands", "3", "eq", "1 2 1", "2 1 2"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = run({"--strands", "3", "eq", "", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = run({"--strands", "3", "eq", "1", "2"});
  CHECK(r.code == 1);
  CHECK(r.out == "not-equal\n");
  r = run({"eq", "-1 2", "2 -1", "--strands", "3", "--pipeline", "geo", "--pre-cancel", "off"});
  CHECK(r.code == 1);
}

TEST_CASE("eq usage errors exit 2") {
  CHECK(run({"--strands", "3", "eq", "1 0", "1"}).code == 2);
  CHECK(run({"--strands", "3", "eq", "3", "1"}).code == 2);
  CHECK(run({"eq", "1", "1"}).code == 2);  // no strand count
  CHECK(run({"--strands", "3", "eq", "1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--pipeline", "fast", "--strands", "3", "eq", "1", "1"}).code == 2);
}

TEST_CASE("normal") {
  CHECK(run({"--strands", "2", "normal", ""}).out == "+1\n+2\n");
  CHECK(run({"--strands", "2", "normal", "1"}).out == "+2\n+2 +1 -2\n");
  CHECK(run({"--strands", "3", "normal", "1 -1"}).out == "+1\n+2\n+3\n");
  CHECK(run({"--strands", "3", "--pre-cancel", "off", "--pipeline", "geo", "normal", "1 -1"}).out ==
        "+1\n+2\n+3\n");
}

TEST_CASE("convert") {
  auto r = run({"convert", "path2word", "(-1,0),(3,1),(2,0)"});
  CHECK(r.code == 0);
  CHECK(r.out == "+3 +2 -3\n");
  r = run({"convert", "word2path", "+2"});
  CHECK(r.out == "(-1,0),(2,0),(-1,0)\n");
  r = run({"convert", "word2path", "+1 +2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not of the form") != std::string::npos);
  r = run({"convert", "path2word", "(-1,0),(2,-1),(2,0)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("link 1") != std::string::npos);
  CHECK(run({"convert", "sideways", "+1"}).code == 2);
}

TEST_CASE("multiply") {
  const std::string id3 = "(-1,0),(1,0),(-1,0),(2,0),(-1,0),(3,0),(-1,0)";
  CHECK(run({"-n", "3", "multiply", id3, id3}).out == id3 + "\n");

  auto gb = [](std::initializer_list<int> letters) {
    return format_gbase(process_word_geometric(BraidWord(3, letters)));
  };
  CHECK(run({"-n", "3", "multiply", gb({1}), gb({-1})}).out == id3 + "\n");
  CHECK(run({"-n", "3", "multiply", gb({1}), gb({2})}).out == gb({1, 2}) + "\n");
  CHECK(run({"-n", "2", "multiply", id3, id3}).code == 2);
}

TEST_CASE("render") {
  auto r = run({"render", "(-1,0),(1,0),(-1,0),(2,0),(-1,0),(3,0),(-1,0),(4,0),(-1,0)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  r = run({"render", "(-1,0),(3,1),(2,0)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<polyline") != std::string::npos);
  CHECK(run({"render", ""}).code == 2);

  const auto file = std::filesystem::temp_directory_path() / "braidwp_render_test.svg";
  r = run({"render", "(-1,0),(3,1),(2,0)", "-o", file.string()});
  CHECK(r.code == 0);
  std::ifstream in(file);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("<?xml") == 0);
  std::filesystem::remove(file);
}

TEST_CASE("oracle-check") {
  auto r = run({"--seed", "5", "oracle-check", "--count", "200", "--max-length", "15"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 200/200") != std::string::npos);
  auto again = run({"--seed", "5", "oracle-check", "--count", "200", "--max-length", "15",
                    "--threads", "3"});
  CHECK(again.out == r.out);
}

TEST_CASE("bench csv header") {
  auto r = run({"--format", "csv", "bench", "--which", "wordproblem", "--quick"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("operation,n,size,l1,l2,reps,median_ns,spread_ns,slope,ratio,verdict\n", 0) ==
        0);
  CHECK(run({"bench", "--which", "nothing", "--quick"}).code == 2);
}
