#include "cli_app.hpp"

#include "json_io.hpp"

#include "shifted/balanced.hpp"
#include "shifted/bijections.hpp"
#include "shifted/enumerate.hpp"
#include "shifted/errors.hpp"
#include "shifted/hooks.hpp"
#include "shifted/kraskiewicz.hpp"
#include "shifted/reflection_order.hpp"
#include "shifted/serialization.hpp"
#include "shifted/signed_permutation.hpp"
#include "shifted/strict_partition.hpp"
#include "shifted/tableau.hpp"
#include "shifted/trapezoid.hpp"
#include "shifted/words.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace shifted::cli {

namespace {

// Effective cap resolution: explicit --max wins, then the
// SHIFTED_BALANCED_MAX environment variable, then the built-in default.
int resolve_cap(const std::optional<int>& cli_max, int fallback) {
    if (cli_max) {
        if (*cli_max < 0) throw UsageError("--max must be nonnegative");
        return *cli_max;
    }
    if (const char* env = std::getenv("SHIFTED_BALANCED_MAX")) {
        std::string s(env);
        if (!s.empty()) {
            try {
                int v = std::stoi(s);
                if (v < 0) throw UsageError("SHIFTED_BALANCED_MAX must be nonnegative");
                return v;
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception&) {
                throw UsageError("SHIFTED_BALANCED_MAX is not an integer: " + s);
            }
        }
    }
    return fallback;
}

// Reads an input argument that may be "-" (stdin), a file path, or, when
// allow_inline is set, a literal compact tableau such as "1,2;3".
std::string read_input(const std::string& spec, std::istream& in, bool allow_inline) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(spec);
    if (file) {
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }
    if (allow_inline) return spec;
    throw UsageError("cannot open input file: " + spec);
}

// Accepts a tableau in JSON, multi-line text, or compact form.
ShiftedTableau parse_tableau_any(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw UsageError("empty tableau input");
    if (text[first] == '{') return tableau_from_json(parse_json(text, "tableau"));
    if (text.find('\n') == std::string::npos && text.find(';') != std::string::npos)
        return parse_tableau_compact(text);
    if (text.find('\n') == std::string::npos && text.find(',') != std::string::npos &&
        text.find(' ') == std::string::npos)
        return parse_tableau_compact(text);
    return parse_tableau_text(text);
}

ShiftedTableau load_tableau(const std::string& spec, std::istream& in) {
    return parse_tableau_any(read_input(spec, in, /*allow_inline=*/true));
}

std::string render_tableau(const ShiftedTableau& t, const std::string& format) {
    if (format == "json") return tableau_to_json(t).dump() + "\n";
    return tableau_to_text(t);
}

// Renders P and Q side by side under headers.
std::string render_pair_text(const InsertionPair& pq) {
    std::vector<std::string> left;
    std::vector<std::string> right;
    {
        std::istringstream ls(tableau_to_text(pq.p));
        std::istringstream rs(tableau_to_text(pq.q));
        std::string line;
        while (std::getline(ls, line)) left.push_back(line);
        while (std::getline(rs, line)) right.push_back(line);
    }
    std::size_t width = 1;
    for (const auto& line : left) width = std::max(width, line.size());
    std::ostringstream out;
    out << "P" << std::string(width + 3, ' ') << "Q\n";
    std::size_t rows = std::max(left.size(), right.size());
    if (rows == 0) {
        out << "(empty)\n";
        return out.str();
    }
    for (std::size_t i = 0; i < rows; ++i) {
        std::string l = i < left.size() ? left[i] : "";
        std::string r = i < right.size() ? right[i] : "";
        l.resize(width + 4, ' ');
        out << l << r << '\n';
    }
    return out.str();
}

std::string render_pair(const InsertionPair& pq, const std::string& format) {
    if (format == "json") return pair_to_json(pq).dump() + "\n";
    return render_pair_text(pq);
}

Json word_to_json(const Word& w) {
    Json j = Json::object();
    j["rank"] = w.rank;
    j["letters"] = w.letters;
    return j;
}

Json order_to_json(const ReflectionOrder& o) {
    Json j = Json::object();
    j["rank"] = o.rank;
    Json roots = Json::array();
    for (const Root& r : o.roots) roots.push_back(r.to_string());
    j["roots"] = roots;
    return j;
}

std::string order_to_text(const ReflectionOrder& o) {
    std::ostringstream out;
    for (std::size_t i = 0; i < o.roots.size(); ++i) {
        if (i) out << ' ';
        out << o.roots[i].to_string();
    }
    out << '\n';
    return out.str();
}

TrapezoidContext context_for(const StrictPartition& lambda, const std::optional<int>& d,
                             const std::optional<int>& r) {
    if (d && r) return make_context(lambda, *d, *r);
    return make_context(lambda);
}

int cmd_count(const std::string& kind, const std::string& shape_text, bool oracle,
              const std::optional<int>& max, std::ostream& out) {
    StrictPartition lambda = parse_shape(shape_text);
    if (kind == "syt") {
        out << hook_length_formula_count(lambda).get_str() << '\n';
        return 0;
    }
    if (kind == "bs") {
        if (oracle) {
            int cap = resolve_cap(max, 9);
            std::size_t n = 0;
            for_each_bs_bruteforce(lambda, [&](const ShiftedTableau&) {
                ++n;
                return true;
            }, cap);
            out << n << '\n';
            return 0;
        }
        out << hook_length_formula_count(lambda).get_str() << '\n';
        return 0;
    }
    throw UsageError("count kind must be 'syt' or 'bs', got '" + kind + "'");
}

int cmd_enum(const std::string& kind, const std::string& shape_text, const std::optional<int>& max,
             const std::string& format, std::ostream& out) {
    StrictPartition lambda = parse_shape(shape_text);
    bool first = true;
    auto emit = [&](const ShiftedTableau& t) {
        if (format == "json") {
            out << tableau_to_json(t).dump() << '\n';
        } else {
            if (!first) out << '\n';
            out << tableau_to_text(t);
        }
        first = false;
        return true;
    };
    if (kind == "syt") {
        int cap = resolve_cap(max, 12);
        if (lambda.size() > cap) {
            throw UsageError("shape has " + std::to_string(lambda.size()) +
                             " boxes, above the enumeration cap " + std::to_string(cap) +
                             " (raise it with --max)");
        }
        for_each_syt(lambda, emit);
        return 0;
    }
    if (kind == "bs") {
        int cap = resolve_cap(max, 9);
        for_each_bs_bruteforce(lambda, emit, cap);
        return 0;
    }
    throw UsageError("enum kind must be 'syt' or 'bs', got '" + kind + "'");
}

int cmd_check(const std::string& kind, const std::string& input, std::istream& in,
              std::ostream& out) {
    ShiftedTableau t = load_tableau(input, in);
    if (kind != "balanced" && kind != "standard")
        throw UsageError("check kind must be 'balanced' or 'standard', got '" + kind + "'");
    if (!t.is_bijective()) {
        out << "FAIL: the filling does not use each of 1.." << t.shape().size()
            << " exactly once\n";
        return 1;
    }
    bool ok = kind == "balanced" ? is_balanced(t) : is_standard(t);
    if (ok) {
        out << "OK: the tableau is " << kind << '\n';
        return 0;
    }
    out << "FAIL: the tableau is not " << kind << '\n';
    return 1;
}

int cmd_insert(const std::vector<std::string>& tokens, int rank, const std::string& format,
               std::ostream& out) {
    std::ostringstream joined;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) joined << ' ';
        joined << tokens[i];
    }
    Word w = parse_word(joined.str(), rank);
    InsertionPair pq = kraskiewicz_insert(w);
    out << render_pair(pq, format);
    return 0;
}

int cmd_reverse(const std::string& input, int steps, const std::string& format, std::istream& in,
                std::ostream& out) {
    if (steps < 1) throw UsageError("--steps must be at least 1");
    InsertionPair pq =
        pair_from_json(parse_json(read_input(input, in, /*allow_inline=*/false), "tableau pair"));
    if (steps > pq.p.shape().size())
        throw UsageError("--steps exceeds the number of boxes in the tableau pair");
    std::vector<int> letters;
    for (int i = 0; i < steps; ++i) {
        auto [rest, letter] = reverse_insert(pq);
        pq = rest;
        letters.push_back(letter);
    }
    if (format == "json") {
        Json j = Json::object();
        j["letters"] = letters;
        j["shape"] = shape_to_json(pq.p.shape());
        j["P"] = rows_to_json(pq.p);
        j["Q"] = rows_to_json(pq.q);
        out << j.dump() << '\n';
        return 0;
    }
    out << "popped:";
    for (int a : letters) out << ' ' << a;
    out << "\n\n" << render_pair_text(pq);
    return 0;
}

int cmd_redwords(const std::string& window_text, const std::optional<int>& max,
                 std::ostream& out) {
    SignedPermutation w = parse_window(window_text);
    std::size_t cap = static_cast<std::size_t>(resolve_cap(max, 16));
    for_each_reduced_word(w, [&](const Word& word) { out << word_to_text(word) << '\n'; }, cap);
    return 0;
}

int cmd_ro(const std::vector<std::string>& tokens, int rank, const std::string& format,
           std::ostream& out) {
    std::ostringstream joined;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) joined << ' ';
        joined << tokens[i];
    }
    Word w = parse_word(joined.str(), rank);
    ReflectionOrder o = reflection_order(w);
    if (format == "json") {
        out << order_to_json(o).dump() << '\n';
    } else {
        out << order_to_text(o);
    }
    return 0;
}

void print_trace(const BijectionTrace& trace, const std::string& format, std::ostream& out) {
    if (!trace.padding_steps.empty()) {
        for (std::size_t i = 0; i < trace.padding_steps.size(); ++i) {
            out << "padding step " << (i + 1) << ":\n"
                << render_tableau(trace.padding_steps[i], format) << '\n';
        }
    }
    out << "padded input:\n" << render_tableau(trace.padded_input, format) << '\n';
    out << "word: " << word_to_text(trace.word) << "\n\n";
    out << "reflection order: " << order_to_text(trace.order) << '\n';
    if (!trace.insertion_p.shape().empty()) {
        out << "insertion tableau P:\n" << render_tableau(trace.insertion_p, format) << '\n';
    }
    out << "padded output:\n" << render_tableau(trace.padded_output, format) << '\n';
}

int cmd_bijection(const std::string& direction, const std::string& shape_text,
                  const std::string& input, const std::optional<int>& d,
                  const std::optional<int>& r, bool trace, const std::string& format,
                  std::istream& in, std::ostream& out) {
    StrictPartition lambda = parse_shape(shape_text);
    TrapezoidContext ctx = context_for(lambda, d, r);
    ShiftedTableau t = load_tableau(input, in);
    if (t.shape() != lambda)
        throw UsageError("input tableau shape does not match the requested shape");
    BijectionTrace tr;
    ShiftedTableau image;
    if (direction == "syt-to-bs") {
        image = syt_to_bs(t, ctx, trace ? &tr : nullptr);
    } else if (direction == "bs-to-syt") {
        image = bs_to_syt(t, ctx, trace ? &tr : nullptr);
    } else {
        throw UsageError("bijection direction must be 'syt-to-bs' or 'bs-to-syt', got '" +
                         direction + "'");
    }
    if (trace) print_trace(tr, format, out);
    out << render_tableau(image, format);
    return 0;
}

int cmd_wlambda(const std::string& shape_text, const std::optional<int>& d,
                const std::optional<int>& r, std::ostream& out) {
    StrictPartition lambda = parse_shape(shape_text);
    TrapezoidContext ctx = context_for(lambda, d, r);
    Json j = Json::object();
    j["d"] = ctx.d;
    j["r"] = ctx.r;
    j["lambda"] = lambda.parts();
    j["a_lambda"] = a_lambda(ctx).letters;
    j["w_lambda"] = w_lambda(ctx).window();
    j["p_lambda"] = rows_to_json(p_lambda(ctx));
    out << j.dump() << '\n';
    return 0;
}

int cmd_verify(const std::string& shape_text, const std::optional<int>& d,
               const std::optional<int>& r, const std::optional<int>& max, std::ostream& out) {
    StrictPartition lambda = parse_shape(shape_text);
    int syt_cap = resolve_cap(max, 12);
    int bs_cap = resolve_cap(max, 9);
    if (lambda.size() > syt_cap) {
        throw UsageError("shape has " + std::to_string(lambda.size()) +
                         " boxes, above the verification cap " + std::to_string(syt_cap) +
                         " (raise it with --max)");
    }
    TrapezoidContext ctx = context_for(lambda, d, r);
    std::vector<std::string> failures;
    std::set<ShiftedTableau> images;
    std::size_t syt_count = 0;
    for_each_syt(lambda, [&](const ShiftedTableau& t) {
        ++syt_count;
        ShiftedTableau b = syt_to_bs(t, ctx);
        if (!is_balanced(b)) failures.push_back("an image of the forward map is not balanced");
        if (!images.insert(b).second)
            failures.push_back("two standard tableaux map to the same balanced tableau");
        if (bs_to_syt(b, ctx) != t)
            failures.push_back("the inverse map does not recover a standard tableau");
        return failures.empty();
    });
    mpz_class hook = hook_length_formula_count(lambda);
    if (hook != mpz_class(static_cast<unsigned long>(syt_count)))
        failures.push_back("the enumerated standard count differs from the hook length count");
    std::optional<std::size_t> oracle_count;
    if (lambda.size() <= bs_cap) {
        std::set<ShiftedTableau> oracle;
        for_each_bs_bruteforce(lambda, [&](const ShiftedTableau& b) {
            oracle.insert(b);
            return true;
        }, bs_cap);
        oracle_count = oracle.size();
        if (oracle != images)
            failures.push_back("the brute-force balanced set differs from the bijection image");
    }
    for (const std::string& f : failures) out << "failure: " << f << '\n';
    out << "SYT=" << syt_count << " BS=" << images.size() << " hook=" << hook.get_str();
    if (oracle_count) out << " oracle=" << *oracle_count;
    out << ' ' << (failures.empty() ? "PASS" : "FAIL") << '\n';
    return failures.empty() ? 0 : 1;
}

const char* const kDemoGolden =
    "balanced input (shape 6,2,1):\n"
    "6 3 4 1 5 9\n"
    ". 7 8\n"
    ". . 2\n"
    "\n"
    "padding step 1:\n"
    "6 3 4 1 5 9 10\n"
    ". 7 8\n"
    ". . 2\n"
    "\n"
    "padding step 2:\n"
    "6 3 4 5 1 9 10\n"
    ". 7 8 11\n"
    ". . 2\n"
    "\n"
    "padding step 3:\n"
    "6 3 4 5 9 1 10\n"
    ". 7 8 11 12\n"
    ". . 2\n"
    "\n"
    "padding step 4:\n"
    "6 3 4 5 9 10 1\n"
    ". 7 8 11 12 13\n"
    ". . 2\n"
    "\n"
    "padding step 5:\n"
    "6 3 4 9 5 10 1\n"
    ". 7 8 12 11 13\n"
    ". . 2 14\n"
    "\n"
    "padding step 6:\n"
    "6 3 4 9 10 5 1\n"
    ". 7 8 12 13 11\n"
    ". . 2 14 15\n"
    "\n"
    "word: 201012103412312\n"
    "\n"
    "insertion tableau P:\n"
    "4 3 0 1 2 3 4\n"
    ". 3 0 1 2 3\n"
    ". . 0 1 2\n"
    "\n"
    "recording tableau Q:\n"
    "1 2 3 5 6 9 10\n"
    ". 4 7 11 12 13\n"
    ". . 8 14 15\n"
    "\n"
    "standard image (shape 6,2,1):\n"
    "1 2 3 5 6 9\n"
    ". 4 7\n"
    ". . 8\n"
    "\n"
    "inverse check: the balanced image of the standard tableau equals the input\n";

int cmd_demo(std::ostream& out) {
    StrictPartition lambda({6, 2, 1});
    TrapezoidContext ctx = make_context(lambda, 3, 2);
    ShiftedTableau b(lambda, {{6, 3, 4, 1, 5, 9}, {7, 8}, {2}});
    BijectionTrace trace;
    ShiftedTableau t = bs_to_syt(b, ctx, &trace);
    InsertionPair pq = kraskiewicz_insert(trace.word);
    std::ostringstream actual;
    actual << "balanced input (shape 6,2,1):\n" << tableau_to_text(b) << '\n';
    for (std::size_t i = 0; i < trace.padding_steps.size(); ++i) {
        actual << "padding step " << (i + 1) << ":\n"
               << tableau_to_text(trace.padding_steps[i]) << '\n';
    }
    actual << "word: " << word_to_text(trace.word) << "\n\n";
    actual << "insertion tableau P:\n" << tableau_to_text(pq.p) << '\n';
    actual << "recording tableau Q:\n" << tableau_to_text(trace.padded_output) << '\n';
    actual << "standard image (shape 6,2,1):\n" << tableau_to_text(t) << '\n';
    if (syt_to_bs(t, ctx) == b) {
        actual << "inverse check: the balanced image of the standard tableau equals the input\n";
    } else {
        actual << "inverse check: FAILED\n";
    }
    out << actual.str();
    if (actual.str() == kDemoGolden) {
        out << "demo: PASS\n";
        return 0;
    }
    out << "demo: FAIL (output differs from the expected transcript)\n";
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bijection between standard and balanced shifted tableaux"};
    app.require_subcommand(1);

    std::string kind;
    std::string shape_text;
    std::string input;
    std::string direction;
    std::string window_text;
    std::vector<std::string> word_tokens;
    std::string format = "text";
    std::optional<int> max;
    std::optional<int> opt_d;
    std::optional<int> opt_r;
    int rank = 0;
    int steps = 1;
    bool oracle = false;
    bool trace = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_dr = [&](CLI::App* sub) {
        auto* od = sub->add_option("--d", opt_d, "trapezoid row count d")->check(CLI::PositiveNumber);
        auto* orr = sub->add_option("--r", opt_r, "trapezoid width parameter r")
                        ->check(CLI::NonNegativeNumber);
        od->needs(orr);
        orr->needs(od);
    };

    CLI::App* c_count = app.add_subcommand("count", "count tableaux of a shifted shape");
    c_count->add_option("kind", kind, "what to count: syt|bs")->required();
    c_count->add_option("shape", shape_text, "strict partition, e.g. 6,2,1")->required();
    c_count->add_flag("--oracle", oracle, "count bs by brute force instead of the hook formula");
    c_count->add_option("--max", max, "cap on the number of boxes for brute force");

    CLI::App* c_enum = app.add_subcommand("enum", "enumerate tableaux of a shifted shape");
    c_enum->add_option("kind", kind, "what to enumerate: syt|bs")->required();
    c_enum->add_option("shape", shape_text, "strict partition, e.g. 4,2")->required();
    c_enum->add_option("--max", max, "cap on the number of boxes");
    add_format(c_enum);

    CLI::App* c_check = app.add_subcommand("check", "check a property of a filled tableau");
    c_check->add_option("kind", kind, "property: balanced|standard")->required();
    c_check->add_option("input", input, "tableau file, '-' for stdin, or inline compact form")
        ->required();

    CLI::App* c_insert = app.add_subcommand("insert", "run reduced-word row insertion");
    c_insert->add_option("word", word_tokens, "word letters, e.g. 010121012342312")->required();
    c_insert->add_option("-n,--rank", rank, "rank n of the signed permutation group")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(c_insert);

    CLI::App* c_reverse = app.add_subcommand("reverse", "reverse row insertion steps");
    c_reverse->add_option("input", input, "JSON file with {shape,P,Q}, '-' for stdin")->required();
    c_reverse->add_option("--steps", steps, "how many letters to pop")->capture_default_str();
    add_format(c_reverse);

    CLI::App* c_redwords = app.add_subcommand("redwords", "list reduced words of a signed permutation");
    c_redwords->add_option("window", window_text, "one-line window, e.g. '1 -3 4 2'")->required();
    c_redwords->add_option("--max", max, "cap on the word length");

    CLI::App* c_ro = app.add_subcommand("ro", "reflection order induced by a reduced word");
    c_ro->add_option("word", word_tokens, "word letters")->required();
    c_ro->add_option("-n,--rank", rank, "rank n of the signed permutation group")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(c_ro);

    CLI::App* c_bij = app.add_subcommand("bijection", "map between standard and balanced tableaux");
    c_bij->add_option("direction", direction, "syt-to-bs or bs-to-syt")->required();
    c_bij->add_option("shape", shape_text, "strict partition of the tableau shape")->required();
    c_bij->add_option("input", input, "tableau file, '-' for stdin, or inline compact form")
        ->required();
    add_dr(c_bij);
    c_bij->add_flag("--trace", trace, "print the intermediate padded tableaux, word, and order");
    add_format(c_bij);

    CLI::App* c_wlambda = app.add_subcommand("wlambda", "trapezoid data attached to a shape");
    c_wlambda->add_option("shape", shape_text, "strict partition, e.g. 6,2,1")->required();
    add_dr(c_wlambda);

    CLI::App* c_verify = app.add_subcommand("verify", "exhaustively verify the bijection on a shape");
    c_verify->add_option("shape", shape_text, "strict partition")->required();
    c_verify->add_option("--max", max, "cap on the number of boxes");
    add_dr(c_verify);

    CLI::App* c_demo = app.add_subcommand("demo", "run the built-in worked example end to end");
    (void)c_demo;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_count->parsed()) return cmd_count(kind, shape_text, oracle, max, out);
        if (c_enum->parsed()) return cmd_enum(kind, shape_text, max, format, out);
        if (c_check->parsed()) return cmd_check(kind, input, std::cin, out);
        if (c_insert->parsed()) return cmd_insert(word_tokens, rank, format, out);
        if (c_reverse->parsed()) return cmd_reverse(input, steps, format, std::cin, out);
        if (c_redwords->parsed()) return cmd_redwords(window_text, max, out);
        if (c_ro->parsed()) return cmd_ro(word_tokens, rank, format, out);
        if (c_bij->parsed())
            return cmd_bijection(direction, shape_text, input, opt_d, opt_r, trace, format,
                                 std::cin, out);
        if (c_wlambda->parsed()) return cmd_wlambda(shape_text, opt_d, opt_r, out);
        if (c_verify->parsed()) return cmd_verify(shape_text, opt_d, opt_r, max, out);
        if (c_demo->parsed()) return cmd_demo(out);
        throw UsageError("no subcommand given");
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace shifted::cli
