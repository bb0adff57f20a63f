#include "divsudoku/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace divsudoku {

namespace {

// Strip comments, split into blank-line-separated chunks of token rows.
std::vector<std::vector<std::vector<int>>> tokenize_blocks(const std::string& text) {
    std::vector<std::vector<std::vector<int>>> blocks;
    std::vector<std::vector<int>> current;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            try {
                row.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad token '" + tok + "'");
            }
        }
        if (row.empty()) {
            if (!current.empty()) blocks.push_back(std::move(current)), current.clear();
        } else {
            current.push_back(std::move(row));
        }
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    return blocks;
}

LatinSquare square_from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    LatinSquare L(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(n));
        for (int c = 0; c < n; ++c) {
            int v = rows[r][c];
            if (v < 1 || v > n)
                throw ParseError("cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                 "): symbol " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(n));
            L.at(r, c) = v - 1;
        }
    }
    // Latin diagnostics with located row/column.
    for (int r = 0; r < n; ++r) {
        std::vector<int> seen(n, 0);
        for (int c = 0; c < n; ++c)
            if (++seen[L.at(r, c)] > 1)
                throw ParseError("row " + std::to_string(r + 1) + " repeats symbol " +
                                 std::to_string(L.at(r, c) + 1));
    }
    for (int c = 0; c < n; ++c) {
        std::vector<int> seen(n, 0);
        for (int r = 0; r < n; ++r)
            if (++seen[L.at(r, c)] > 1)
                throw ParseError("column " + std::to_string(c + 1) + " repeats symbol " +
                                 std::to_string(L.at(r, c) + 1));
    }
    return L;
}

}  // namespace

LatinSquare parse_square(const std::string& text) {
    auto blocks = tokenize_blocks(text);
    if (blocks.size() != 1) throw ParseError("expected exactly one square");
    return square_from_rows(blocks[0]);
}

std::vector<LatinSquare> parse_squares(const std::string& text) {
    std::vector<LatinSquare> out;
    for (const auto& b : tokenize_blocks(text)) out.push_back(square_from_rows(b));
    return out;
}

std::string render_square(const LatinSquare& L) {
    std::ostringstream out;
    for (int r = 0; r < L.n; ++r) {
        for (int c = 0; c < L.n; ++c) {
            if (c) out << ' ';
            out << L.at(r, c) + 1;
        }
        out << '\n';
    }
    return out.str();
}

SudokuPartition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    if (text.find('|') != std::string::npos) {
        // pipe-delimited comma lists, 1-based
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, '|')) {
            std::vector<int> block;
            std::istringstream ps(part);
            std::string tok;
            while (std::getline(ps, tok, ',')) {
                try {
                    block.push_back(std::stoi(tok) - 1);
                } catch (const std::exception&) {
                    throw ParseError("bad partition element '" + tok + "'");
                }
            }
            blocks.push_back(std::move(block));
        }
    } else {
        // compact digit-block form {123 456 789}
        std::vector<int> block;
        for (char ch : text) {
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                block.push_back(ch - '1');
            } else if (!block.empty()) {
                blocks.push_back(std::move(block));
                block.clear();
            }
        }
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    const int m = static_cast<int>(blocks.size());
    std::vector<int> bo(m * m, -1);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(blocks[i].size()) != m)
            throw ParseError("partition block has wrong size");
        for (int e : blocks[i]) {
            if (e < 0 || e >= m * m || bo[e] != -1) throw ParseError("not a partition");
            bo[e] = i;
        }
    }
    return SudokuPartition(m, std::move(bo)).canonical();
}

std::string render_partition(const SudokuPartition& p) {
    std::ostringstream out;
    bool compact = p.size() <= 9;
    out << (compact ? "{" : "");
    bool first_block = true;
    for (const auto& block : p.blocks()) {
        if (!first_block) out << (compact ? " " : "|");
        first_block = false;
        bool first = true;
        for (int e : block) {
            if (compact) {
                out << e + 1;
            } else {
                if (!first) out << ',';
                out << e + 1;
            }
            first = false;
        }
    }
    if (compact) out << "}";
    return out.str();
}

LatinSquare square_from_digits(const char* digits81) {
    LatinSquare L(9);
    for (int i = 0; i < 81; ++i) L.cells[i] = digits81[i] - '1';
    return L;
}

PartialLatinSquare partial_from_digits(const char* digits81) {
    PartialLatinSquare P(9);
    for (int i = 0; i < 81; ++i) P.cells[i] = digits81[i] == '.' ? -1 : digits81[i] - '1';
    return P;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace divsudoku
