#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "json_io.hpp"
#include "shifted/kraskiewicz.hpp"
#include "shifted/serialization.hpp"
#include "test_util.hpp"

using namespace shifted;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count commands") {
    CliResult r = call({"count", "syt", "6,2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "30\n");
    r = call({"count", "bs", "6,2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "30\n");
    r = call({"count", "bs", "4,2", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    r = call({"count", "syt", "9,8,7,6,5"});
    CHECK(r.code == 0);
    CHECK(r.out.size() > 1);
}

TEST_CASE("enum, check, insert, reverse") {
    CliResult r = call({"enum", "syt", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2\n. 3\n");
    r = call({"enum", "bs", "2,1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"shape\":[2,1],\"rows\":[[2,3],[1]]}\n");
    r = call({"check", "balanced", "2,3;1"});
    CHECK(r.code == 0);
    CHECK(r.out == "OK: the tableau is balanced\n");
    r = call({"check", "balanced", "1,2;3"});
    CHECK(r.code == 1);
    CHECK(r.out == "FAIL: the tableau is not balanced\n");
    r = call({"check", "standard", "1,2;3"});
    CHECK(r.code == 0);

    r = call({"insert", "010121012342312", "-n", "5", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["shape"] == Json({7, 5, 3}));
    CHECK(j["P"] == Json({{4, 3, 0, 1, 2, 3, 4}, {3, 0, 1, 2, 3}, {0, 1, 2}}));
    CHECK(j["Q"] == Json({{1, 2, 4, 5, 9, 10, 11}, {3, 6, 8, 12, 13}, {7, 14, 15}}));

    Word word = parse_word("201012103412312", 5);
    InsertionPair pq = kraskiewicz_insert(word);
    const char* path = "cli_reverse_input.json";
    {
        std::ofstream f(path);
        f << pair_to_json(pq).dump() << '\n';
    }
    r = call({"reverse", path, "--steps", "15", "--format", "json"});
    CHECK(r.code == 0);
    Json rev = Json::parse(r.out);
    std::vector<int> letters = rev["letters"].get<std::vector<int>>();
    std::reverse(letters.begin(), letters.end());
    CHECK(letters == word.letters);
    CHECK(rev["shape"] == Json::array());
    r = call({"reverse", path, "--steps", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("popped: 2 1\n") == 0);
    std::remove(path);
}

TEST_CASE("redwords and ro") {
    CliResult r = call({"redwords", "--", "-1 -2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0101\n1010\n");
    r = call({"ro", "21031", "-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "e3-e2 e3-e1 e3 e4-e2 e3+e1\n");
    r = call({"ro", "0", "1", "0", "-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "e1 e2+e1 e2\n");
    r = call({"ro", "21031", "-n", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"rank\":4,\"roots\":[\"e3-e2\",\"e3-e1\",\"e3\",\"e4-e2\",\"e3+e1\"]}\n");
}

TEST_CASE("bijection command with trace") {
    CliResult r =
        call({"bijection", "bs-to-syt", "6,2,1", "6,3,4,1,5,9;7,8;2", "--d", "3", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 3 5 6 9\n. 4 7\n. . 8\n");
    r = call({"bijection", "syt-to-bs", "6,2,1", "1,2,3,5,6,9;4,7;8", "--d", "3", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "6 3 4 1 5 9\n. 7 8\n. . 2\n");
    r = call({"bijection", "bs-to-syt", "6,2,1", "6,3,4,1,5,9;7,8;2", "--d", "3", "--r", "2",
              "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out.find("word: 201012103412312") != std::string::npos);
    CHECK(r.out.find("reflection order: ") != std::string::npos);
    CHECK(r.out.find("padding step 6:") != std::string::npos);

    // roundtrip with the default ambient trapezoid
    ShiftedTableau t = testutil::tab({4, 2}, {{1, 2, 3, 5}, {4, 6}});
    r = call({"bijection", "syt-to-bs", "4,2", tableau_to_compact(t)});
    CHECK(r.code == 0);
    ShiftedTableau b = parse_tableau_text(r.out);
    r = call({"bijection", "bs-to-syt", "4,2", tableau_to_compact(b)});
    CHECK(r.code == 0);
    CHECK(parse_tableau_text(r.out) == t);

    r = call({"bijection", "bs-to-syt", "3,1", "6,3,4,1,5,9;7,8;2"});
    CHECK(r.code == 2);
    r = call({"bijection", "bs-to-syt", "6,2,1", "1,2,3,5,6,9;4,7;8", "--d", "3", "--r", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("wlambda json golden") {
    CliResult r = call({"wlambda", "6,2,1", "--d", "3", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"d\":3,\"r\":2,\"lambda\":[6,2,1],\"a_lambda\":[4,1,2,3,1,2],"
          "\"w_lambda\":[-2,-1,4,-3,5],\"p_lambda\":[[2,1,0,1,2,3],[1,0],[0]]}\n");
    r = call({"wlambda", "6,2,1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["d"] == 3);
    CHECK(j["r"] == 1);
    r = call({"wlambda", "2,1"});
    CHECK(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["d"] == 2);
    CHECK(j["r"] == 0);
}

TEST_CASE("verify and demo") {
    CliResult r = call({"verify", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SYT=1 BS=1") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    r = call({"verify", "4,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SYT=5 BS=5 hook=5 oracle=5 PASS") != std::string::npos);
    r = call({"demo"});
    CHECK(r.code == 0);
    CHECK(r.out.find("demo: PASS") != std::string::npos);
}

TEST_CASE("exit codes and error text") {
    CHECK(call({}).code == 2);
    CHECK(call({"count", "syt"}).code == 2);
    CHECK(call({"count", "widgets", "2,1"}).code == 2);
    CHECK(call({"count", "syt", "2,2"}).code == 2);
    CliResult r = call({"insert", "00", "-n", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") == 0);
    CHECK(call({"enum", "syt", "9,8,7,6,5"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"bijection", "sideways", "2,1", "2,3;1"}).code == 2);
}

TEST_CASE("environment cap override") {
    setenv("SHIFTED_BALANCED_MAX", "3", 1);
    CHECK(call({"enum", "syt", "3,1"}).code == 2);
    CHECK(call({"enum", "syt", "3,1", "--max", "4"}).code == 0);
    setenv("SHIFTED_BALANCED_MAX", "20", 1);
    CHECK(call({"enum", "syt", "5,4,3,1"}).code == 0);
    unsetenv("SHIFTED_BALANCED_MAX");
    CHECK(call({"enum", "syt", "5,4,3,1"}).code == 2);
}

TEST_CASE("json round trips") {
    ShiftedTableau t = testutil::tab({6, 2, 1}, {{6, 3, 4, 1, 5, 9}, {7, 8}, {2}});
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
    InsertionPair pq = kraskiewicz_insert(parse_word("0101", 2));
    InsertionPair back = pair_from_json(pair_to_json(pq));
    CHECK(back == pq);
    CHECK(parse_tableau_text(tableau_to_text(t)) == t);
    StrictPartition lam({5, 3, 2});
    CHECK(parse_shape(shape_to_text(lam)) == lam);
}
