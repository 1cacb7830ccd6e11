#include "shifted/serialization.hpp"

#include <sstream>
#include <vector>

#include "shifted/errors.hpp"

namespace shifted {

namespace {

int parse_int(const std::string& token, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw UsageError(what + ": cannot parse \"" + token + "\" as an integer");
    }
    if (used != token.size())
        throw UsageError(what + ": cannot parse \"" + token + "\" as an integer");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> whitespace_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

ShiftedTableau tableau_from_parsed_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return ShiftedTableau(StrictPartition(std::move(parts)), std::move(rows));
}

}  // namespace

std::string shape_to_text(const StrictPartition& lambda) {
    std::string out;
    for (int i = 1; i <= lambda.d(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(lambda.part(i));
    }
    return out;
}

StrictPartition parse_shape(const std::string& text) {
    std::vector<int> parts;
    for (const std::string& token : split(text, ','))
        parts.push_back(parse_int(token, "shape"));
    return StrictPartition(std::move(parts));
}

std::string tableau_to_text(const ShiftedTableau& t) {
    std::string out;
    for (int i = 1; i <= t.shape().d(); ++i) {
        std::string line;
        for (int k = 1; k < i; ++k) line += ". ";
        const auto& row = t.rows()[static_cast<std::size_t>(i - 1)];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) line += " ";
            line += std::to_string(row[k]);
        }
        out += line;
        out += "\n";
    }
    return out;
}

ShiftedTableau parse_tableau_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> tokens = whitespace_tokens(line);
        if (tokens.empty()) continue;
        std::vector<int> row;
        for (const std::string& token : tokens) {
            if (token == ".") continue;
            row.push_back(parse_int(token, "tableau"));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return tableau_from_parsed_rows(std::move(rows));
}

std::string tableau_to_compact(const ShiftedTableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i > 0) out += ";";
        const auto& row = t.rows()[i];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) out += ",";
            out += std::to_string(row[k]);
        }
    }
    return out;
}

ShiftedTableau parse_tableau_compact(const std::string& text) {
    std::vector<std::vector<int>> rows;
    for (const std::string& row_text : split(text, ';')) {
        std::vector<int> row;
        for (const std::string& token : split(row_text, ','))
            row.push_back(parse_int(token, "tableau"));
        rows.push_back(std::move(row));
    }
    return tableau_from_parsed_rows(std::move(rows));
}

std::string window_to_text(const SignedPermutation& w) {
    std::string out;
    for (int i = 1; i <= w.n(); ++i) {
        if (i > 1) out += " ";
        out += std::to_string(w.apply(i));
    }
    return out;
}

SignedPermutation parse_window(const std::string& text) {
    std::vector<int> window;
    for (const std::string& token : whitespace_tokens(text))
        window.push_back(parse_int(token, "window"));
    if (window.empty()) throw UsageError("window: empty");
    return SignedPermutation(std::move(window));
}

std::string word_to_text(const Word& word) {
    bool all_single_digit = true;
    for (int a : word.letters)
        if (a > 9) all_single_digit = false;
    std::string out;
    for (std::size_t k = 0; k < word.letters.size(); ++k) {
        if (k > 0 && !all_single_digit) out += " ";
        out += std::to_string(word.letters[k]);
    }
    return out;
}

Word parse_word(const std::string& text, int rank) {
    std::vector<std::string> tokens = whitespace_tokens(text);
    Word out{rank, {}};
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        // Contiguous digit shorthand.
        for (char ch : tokens[0]) {
            if (ch < '0' || ch > '9')
                throw UsageError("word: cannot parse digit string \"" + tokens[0] + "\"");
            out.letters.push_back(ch - '0');
        }
    } else {
        for (const std::string& token : tokens)
            out.letters.push_back(parse_int(token, "word"));
    }
    validate_word(out);
    return out;
}

}  // namespace shifted
