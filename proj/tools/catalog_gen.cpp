// Generates the identity catalog shipped as data/catalog.json.
//
// Records are written here as readable expression strings; save_catalog
// canonicalizes each one (parse + re-print) before serialization, so the
// emitted file is stable under load/save round trips.  Every record can be
// re-checked against brute-force summation with `fibsum catalog verify`.

#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibsum/catalog.hpp"
#include "fibsum/errors.hpp"
#include "fibsum/expr.hpp"

namespace {

using fibsum::IdentityRecord;

std::vector<IdentityRecord> records;
std::string currentNote;

void note(const std::string& text) { currentNote = text; }

// Declares a record.  Test ranges are derived from the free symbols: the
// bound "n" gets [0, 10], every offset symbol gets [-3, 3].
void add(const std::string& id, const std::string& lhs, const std::string& rhs) {
    IdentityRecord rec;
    rec.id = id;
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.constraint = "1";
    rec.note = currentNote;
    std::set<std::string> syms;
    for (const fibsum::ExprPtr& e : {fibsum::parse(lhs), fibsum::parse(rhs)})
        for (const std::string& s : fibsum::free_symbols(*e)) syms.insert(s);
    for (const std::string& s : syms)
        rec.vars[s] = s == "n" ? std::pair<long long, long long>{0, 10}
                               : std::pair<long long, long long>{-3, 3};
    records.push_back(std::move(rec));
}

// ---------------------------------------------------------------------------
// Quadratic sums (ids 11.xx).
// ---------------------------------------------------------------------------

void quadratic_list() {
    note("weight 1");
    add("11.01",
        "sum(k = 0..n, G[p + k] * H[q + k])",
        "1/2 * (G[p + n] * H[q + n + 1] + G[p + n + 1] * H[q + n] - G[p - 1] * H[q]"
        " - G[p] * H[q - 1])");
    add("11.02",
        "sum(k = 0..n, k * G[p + k] * H[q + k])",
        "1/2 * n * (G[p + n] * H[q + n + 1] + G[p + n + 1] * H[q + n])"
        " - 1/4 * (G[p + n + 1] * H[q + n + 2] - G[p + n - 1] * H[q + n - 2]"
        " - G[p + 1] * H[q + 2] + G[p - 1] * H[q - 2])");
    add("11.03",
        "sum(k = 0..n, k^2 * G[p + k] * H[q + k])",
        "1/2 * n^2 * (G[p + n] * H[q + n + 1] + G[p + n + 1] * H[q + n])"
        " - 1/2 * n * (G[p + n + 1] * H[q + n + 2] - G[p + n - 1] * H[q + n - 2])"
        " + G[p + n] * H[q + n - 1] + G[p + n + 1] * H[q + n]"
        " - G[p] * H[q - 1] - G[p + 1] * H[q]");
    add("11.04",
        "sum(k = 0..n, k^3 * G[p + k] * H[q + k])",
        "1/2 * n^3 * (G[p + n] * H[q + n + 1] + G[p + n + 1] * H[q + n])"
        " - 3/4 * n^2 * (G[p + n + 1] * H[q + n + 2] - G[p + n - 1] * H[q + n - 2])"
        " + 3 * n * (G[p + n] * H[q + n - 1] + G[p + n + 1] * H[q + n])"
        " - 1/8 * (23 * (G[p + n] * H[q + n] - G[p] * H[q])"
        " + 11 * (G[p + n - 1] * H[q + n - 1] + G[p + n + 1] * H[q + n + 1]"
        " - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("11.05",
        "sum(k = 0..n, G[p + 2 * k] * H[q + k])",
        "1/2 * (G[p + 2 * n + 1] * H[q + n] + G[p + 2 * n - 1] * H[q + n + 1]"
        " + G[p] * H[q] - G[p - 1] * H[q + 2])");
    add("11.06",
        "sum(k = 0..n, k * G[p + 2 * k] * H[q + k])",
        "1/2 * n * (G[p + 2 * n + 1] * H[q + n] + G[p + 2 * n - 1] * H[q + n + 1])"
        " - 1/4 * (3 * (G[p + 2 * n - 2] * H[q + n + 1] - G[p - 2] * H[q + 1])"
        " - G[p + 2 * n - 3] * H[q + n] + G[p - 3] * H[q])");
    add("11.07",
        "sum(k = 0..n, k^2 * G[p + 2 * k] * H[q + k])",
        "1/2 * n^2 * (G[p + 2 * n + 1] * H[q + n] + G[p + 2 * n - 1] * H[q + n + 1])"
        " - 1/2 * n * (3 * G[p + 2 * n - 2] * H[q + n + 1] - G[p + 2 * n - 3] * H[q + n])"
        " + 1/4 * (3 * (G[p + 2 * n - 3] * H[q + n + 3] - G[p - 3] * H[q + 3])"
        " - G[p + 2 * n - 4] * H[q + n + 2] + G[p - 4] * H[q + 2])");
    add("11.08",
        "sum(k = 0..n, G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * (G[p + 2 * n] * H[q + 2 * n + 1] + G[p + 2 * n + 1] * H[q + 2 * n + 2]"
        " + n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 6 * G[p] * H[q] - G[p + 2] * H[q + 2])");
    add("11.09",
        "sum(k = 0..n, k * G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * n * (G[p + 2 * n] * H[q + 2 * n + 1] + G[p + 2 * n + 1] * H[q + 2 * n + 2])"
        " - 1/25 * (2 * G[p + 2 * n] * H[q + 2 * n] + G[p + 2 * n - 1] * H[q + 2 * n - 1]"
        " + G[p + 2 * n + 1] * H[q + 2 * n + 1]"
        " - 2 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 1/10 * n * (n + 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1])");
    add("11.10",
        "sum(k = 0..n, k^2 * G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * n^2 * (G[p + 2 * n] * H[q + 2 * n + 1] + G[p + 2 * n + 1] * H[q + 2 * n + 2])"
        " - 1/25 * (2 * n * (2 * G[p + 2 * n] * H[q + 2 * n]"
        " + G[p + 2 * n - 1] * H[q + 2 * n - 1] + G[p + 2 * n + 1] * H[q + 2 * n + 1])"
        " - 3 * (G[p + 2 * n - 1] * H[q + 2 * n] + G[p + 2 * n] * H[q + 2 * n + 1]"
        " - G[p - 1] * H[q] - G[p] * H[q + 1]))"
        " + 1/30 * n * (n + 1) * (2 * n + 1)"
        " * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])");
    add("11.11",
        "sum(k = 0..n, G[p + 3 * k] * H[q + k])",
        "1/5 * (G[p + 3 * n] * H[q + n + 1] + G[p + 3 * n + 3] * H[q + n]"
        " - G[p] * H[q - 1] - G[p - 3] * H[q])");
    add("11.12",
        "sum(k = 0..n, G[p + 3 * k] * H[q + 3 * k])",
        "1/4 * (G[p + 3 * n] * H[q + 3 * n + 1] + G[p + 3 * n + 2] * H[q + 3 * n]"
        " + G[p] * H[q - 2] - G[p - 1] * H[q])");
    add("11.13",
        "sum(k = 0..n, G[p + 4 * k] * H[q + 4 * k])",
        "1/15 * (G[p + 4 * n + 2] * H[q + 4 * n + 1] + G[p + 4 * n + 3] * H[q + 4 * n + 2]"
        " + 3 * n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 12 * G[p] * H[q] - 5 * G[p + 1] * H[q + 1] + 2 * G[p - 1] * H[q - 1])");
    add("11.14",
        "sum(k = 0..n, G[p + 5 * k] * H[q + 5 * k])",
        "1/22 * (G[p + 5 * n] * H[q + 5 * n + 5] + G[p + 5 * n + 5] * H[q + 5 * n]"
        " - G[p] * H[q - 5] - G[p - 5] * H[q])");

    add("11.15",
        "sum(k = 0..n, G[p + k] * H[q - k])",
        "1/5 * (G[p + n] * H[q - n] - G[p + n + 1] * H[q - n - 1]"
        " + n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 4 * G[p] * H[q] + G[p + 1] * H[q - 1])");
    add("11.16",
        "sum(k = 0..n, k * G[p + k] * H[q - k])",
        "1/5 * n * (G[p + n] * H[q - n] - G[p + n + 1] * H[q - n - 1])"
        " + 1/25 * (3 * G[p + n] * H[q - n] - G[p + n - 1] * H[q - n - 1]"
        " - G[p + n + 1] * H[q - n + 1]"
        " - 3 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 1/10 * n * (n + 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])");
    add("11.17",
        "sum(k = 0..n, k^2 * G[p + k] * H[q - k])",
        "1/5 * n^2 * (G[p + n] * H[q - n] - G[p + n + 1] * H[q - n - 1])"
        " + 1/25 * (2 * n * (3 * G[p + n] * H[q - n] - G[p + n - 1] * H[q - n - 1]"
        " - G[p + n + 1] * H[q - n + 1])"
        " + G[p + n] * H[q - n - 1] - G[p + n - 1] * H[q - n]"
        " - G[p] * H[q - 1] + G[p - 1] * H[q])"
        " + 1/30 * n * (n + 1) * (2 * n + 1)"
        " * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])");
    add("11.18",
        "sum(k = 0..n, k^3 * G[p + k] * H[q - k])",
        "1/5 * n^3 * (G[p + n] * H[q - n] - G[p + n + 1] * H[q - n - 1])"
        " + 3/25 * n * (n * (3 * G[p + n] * H[q - n] - G[p + n - 1] * H[q - n - 1]"
        " - G[p + n + 1] * H[q - n + 1])"
        " + G[p + n] * H[q - n - 1] - G[p + n - 1] * H[q - n])"
        " - 1/125 * (3 * G[p + n] * H[q - n] - G[p + n - 1] * H[q - n - 1]"
        " - G[p + n + 1] * H[q - n + 1]"
        " - 3 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 1/20 * n^2 * (n + 1)^2"
        " * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])");
    add("11.19",
        "sum(k = 0..n, G[p + 2 * k] * H[q - k])",
        "1/2 * (G[p + 2 * n + 2] * H[q - n] + G[p + 2 * n + 1] * H[q - n + 1]"
        " - G[p - 1] * H[q] - G[p + 1] * H[q + 1])");
    add("11.20",
        "sum(k = 0..n, G[p + k] * H[q - 2 * k])",
        "1/2 * (G[p + n] * H[q - 2 * n] - G[p + n + 2] * H[q - 2 * n + 1]"
        " + G[p] * H[q] + G[p + 2] * H[q + 1])");
    add("11.21",
        "sum(k = 0..n, G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * (G[p + 2 * n + 1] * H[q - 2 * n] - G[p + 2 * n + 2] * H[q - 2 * n - 1]"
        " + n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 6 * G[p] * H[q] - G[p + 2] * H[q - 2])");
    add("11.22",
        "sum(k = 0..n, k * G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * n * (G[p + 2 * n + 1] * H[q - 2 * n] - G[p + 2 * n + 2] * H[q - 2 * n - 1])"
        " - 1/25 * (3 * G[p + 2 * n] * H[q - 2 * n] - G[p + 2 * n - 1] * H[q - 2 * n - 1]"
        " - G[p + 2 * n + 1] * H[q - 2 * n + 1]"
        " - 3 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 1/10 * n * (n + 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])");
    add("11.23",
        "sum(k = 0..n, k^2 * G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * n^2 * (G[p + 2 * n + 1] * H[q - 2 * n] - G[p + 2 * n + 2] * H[q - 2 * n - 1])"
        " - 1/25 * (2 * n * (3 * G[p + 2 * n] * H[q - 2 * n]"
        " - G[p + 2 * n - 1] * H[q - 2 * n - 1] - G[p + 2 * n + 1] * H[q - 2 * n + 1])"
        " - 3 * (G[p + 2 * n - 1] * H[q - 2 * n] - G[p + 2 * n] * H[q - 2 * n - 1]"
        " - G[p - 1] * H[q] + G[p] * H[q - 1]))"
        " + 1/30 * n * (n + 1) * (2 * n + 1)"
        " * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])");
    add("11.24",
        "sum(k = 0..n, G[p + 3 * k] * H[q - k])",
        "1/3 * (G[p + 3 * n + 3] * H[q - n] + G[p + 3 * n] * H[q - n - 1]"
        " - G[p - 3] * H[q] - G[p] * H[q + 1])");
    add("11.25",
        "sum(k = 0..n, G[p + k] * H[q - 3 * k])",
        "-1/3 * (G[p + n + 1] * H[q - 3 * n] + G[p + n] * H[q - 3 * n - 3]"
        " - G[p] * H[q + 3] - G[p - 1] * H[q])");
    add("11.26",
        "sum(k = 0..n, G[p + 3 * k] * H[q - 3 * k])",
        "1/10 * (G[p + 3 * n + 2] * H[q - 3 * n] - G[p + 3 * n + 3] * H[q - 3 * n - 1]"
        " + 2 * n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 8 * G[p] * H[q] + 3 * G[p + 1] * H[q - 1] - G[p - 1] * H[q + 1])");
    add("11.27",
        "sum(k = 0..n, G[p + 4 * k] * H[q - 4 * k])",
        "1/15 * (G[p + 4 * n + 3] * H[q - 4 * n] - G[p + 4 * n + 4] * H[q - 4 * n - 1]"
        " + 3 * n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 12 * G[p] * H[q] + 5 * G[p + 1] * H[q - 1] - 2 * G[p - 1] * H[q + 1])");
    add("11.28",
        "sum(k = 0..n, G[p + 5 * k] * H[q - 5 * k])",
        "1/25 * (G[p + 5 * n + 4] * H[q - 5 * n] - G[p + 5 * n + 5] * H[q - 5 * n - 1]"
        " + 5 * n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 20 * G[p] * H[q] + 8 * G[p + 1] * H[q - 1] - 3 * G[p - 1] * H[q + 1])");

    note("weight -1");
    add("11.29",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q + k])",
        "1/5 * ((-1)^n * (G[p + n] * H[q + n] + G[p + n + 1] * H[q + n + 1])"
        " + n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 4 * G[p] * H[q] - G[p + 1] * H[q + 1])");
    add("11.30",
        "sum(k = 0..n, (-1)^k * k * G[p + k] * H[q + k])",
        "1/5 * (-1)^n * n * (G[p + n] * H[q + n] + G[p + n + 1] * H[q + n + 1])"
        " + 1/25 * ((-1)^n * (2 * G[p + n] * H[q + n] + G[p + n - 1] * H[q + n - 1]"
        " + G[p + n + 1] * H[q + n + 1])"
        " - 2 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 1/10 * n * (n + 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1])");
    add("11.31",
        "sum(k = 0..n, (-1)^k * k^2 * G[p + k] * H[q + k])",
        "1/5 * (-1)^n * n^2 * (G[p + n] * H[q + n] + G[p + n + 1] * H[q + n + 1])"
        " + 1/25 * ((-1)^n * (2 * n * (2 * G[p + n] * H[q + n]"
        " + G[p + n - 1] * H[q + n - 1] + G[p + n + 1] * H[q + n + 1])"
        " - G[p + n] * H[q + n - 1] - G[p + n + 1] * H[q + n])"
        " + G[p] * H[q - 1] + G[p + 1] * H[q])"
        " + 1/30 * n * (n + 1) * (2 * n + 1)"
        " * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])");
    add("11.32",
        "sum(k = 0..n, (-1)^k * k^3 * G[p + k] * H[q + k])",
        "1/5 * (-1)^n * n^3 * (G[p + n] * H[q + n] + G[p + n + 1] * H[q + n + 1])"
        " + 3/25 * (-1)^n * n * (n * (2 * G[p + n] * H[q + n]"
        " + G[p + n - 1] * H[q + n - 1] + G[p + n + 1] * H[q + n + 1])"
        " - G[p + n] * H[q + n - 1] - G[p + n + 1] * H[q + n])"
        " - 1/125 * ((-1)^n * (2 * G[p + n] * H[q + n] + G[p + n - 1] * H[q + n - 1]"
        " + G[p + n + 1] * H[q + n + 1])"
        " - 2 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 1/20 * n^2 * (n + 1)^2"
        " * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])");
    add("11.33",
        "sum(k = 0..n, (-1)^k * G[p + 2 * k] * H[q + k])",
        "1/2 * ((-1)^n * (G[p + 2 * n + 3] * H[q + n] - G[p + 2 * n + 1] * H[q + n + 1])"
        " + G[p + 1] * H[q - 1] - G[p - 1] * H[q])");
    add("11.34",
        "sum(k = 0..n, (-1)^k * k * G[p + 2 * k] * H[q + k])",
        "1/2 * (-1)^n * n * (G[p + 2 * n + 3] * H[q + n] - G[p + 2 * n + 1] * H[q + n + 1])"
        " + 1/4 * ((-1)^n * (3 * G[p + 2 * n + 2] * H[q + n - 1]"
        " - G[p + 2 * n + 3] * H[q + n])"
        " - 3 * G[p + 2] * H[q - 1] + G[p + 3] * H[q])");
    add("11.35",
        "sum(k = 0..n, (-1)^k * k^2 * G[p + 2 * k] * H[q + k])",
        "1/2 * (-1)^n * n * (n * (G[p + 2 * n + 3] * H[q + n]"
        " - G[p + 2 * n + 1] * H[q + n + 1])"
        " + 3 * G[p + 2 * n + 2] * H[q + n - 1] - G[p + 2 * n + 3] * H[q + n])"
        " - 1/4 * ((-1)^n * (3 * G[p + 2 * n + 3] * H[q + n - 3]"
        " - G[p + 2 * n + 4] * H[q + n - 2])"
        " - 3 * G[p + 3] * H[q - 3] + G[p + 4] * H[q - 2])");
    add("11.36",
        "sum(k = 0..n, (-1)^k * G[p + 2 * k] * H[q + 2 * k])",
        "1/6 * ((-1)^n * (G[p + 2 * n] * H[q + 2 * n + 2] + G[p + 2 * n + 2] * H[q + 2 * n])"
        " + G[p] * H[q - 2] + G[p - 2] * H[q])");
    add("11.37",
        "sum(k = 0..n, (-1)^k * k * G[p + 2 * k] * H[q + 2 * k])",
        "1/6 * (-1)^n * n * (G[p + 2 * n] * H[q + 2 * n + 2]"
        " + G[p + 2 * n + 2] * H[q + 2 * n])"
        " + 1/36 * ((-1)^n * (7 * G[p + 2 * n] * H[q + 2 * n]"
        " - G[p + 2 * n - 1] * H[q + 2 * n - 1] - G[p + 2 * n + 1] * H[q + 2 * n + 1])"
        " - 7 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])");
    add("11.38",
        "sum(k = 0..n, (-1)^k * k^2 * G[p + 2 * k] * H[q + 2 * k])",
        "1/6 * (-1)^n * n^2 * (G[p + 2 * n] * H[q + 2 * n + 2]"
        " + G[p + 2 * n + 2] * H[q + 2 * n])"
        " + 1/18 * (-1)^n * n * (7 * G[p + 2 * n] * H[q + 2 * n]"
        " - G[p + 2 * n - 1] * H[q + 2 * n - 1] - G[p + 2 * n + 1] * H[q + 2 * n + 1])"
        " - 1/27 * ((-1)^n * (G[p + 2 * n] * H[q + 2 * n - 1]"
        " + G[p + 2 * n + 1] * H[q + 2 * n]) - G[p] * H[q - 1] - G[p + 1] * H[q])");
    add("11.39",
        "sum(k = 0..n, (-1)^k * G[p + 3 * k] * H[q + k])",
        "1/3 * ((-1)^n * (G[p + 3 * n + 3] * H[q + n] - G[p + 3 * n] * H[q + n + 1])"
        " + G[p] * H[q - 1] - G[p - 3] * H[q])");
    add("11.40",
        "sum(k = 0..n, (-1)^k * G[p + 3 * k] * H[q + 3 * k])",
        "1/10 * (-1)^n * (G[p + 3 * n + 1] * H[q + 3 * n + 1]"
        " + G[p + 3 * n + 2] * H[q + 3 * n + 2])"
        " + 1/5 * n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 1/10 * (5 * G[p] * H[q] - 3 * G[p] * H[q - 1] - G[p - 1] * H[q + 3])");
    add("11.41",
        "sum(k = 0..n, (-1)^k * G[p + 4 * k] * H[q + 4 * k])",
        "1/14 * ((-1)^n * (G[p + 4 * n] * H[q + 4 * n + 4] + G[p + 4 * n + 4] * H[q + 4 * n])"
        " + G[p] * H[q - 4] + G[p - 4] * H[q])");
    add("11.42",
        "sum(k = 0..n, (-1)^k * G[p + 5 * k] * H[q + 5 * k])",
        "1/25 * (-1)^n * (G[p + 5 * n + 2] * H[q + 5 * n + 2]"
        " + G[p + 5 * n + 3] * H[q + 5 * n + 3])"
        " + 1/5 * n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " + 1/25 * (12 * G[p] * H[q] - 8 * G[p] * H[q - 1] - G[p - 1] * H[q + 5])");
    add("11.43",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q - k])",
        "1/2 * ((-1)^n * (G[p + n + 1] * H[q - n] - G[p + n] * H[q - n - 1])"
        " - G[p - 1] * H[q] + G[p] * H[q + 1])");
    add("11.44",
        "sum(k = 0..n, (-1)^k * k * G[p + k] * H[q - k])",
        "1/2 * (-1)^n * n * (G[p + n + 1] * H[q - n] - G[p + n] * H[q - n - 1])"
        " - 1/4 * ((-1)^n * (2 * G[p + n] * H[q - n] - G[p + n - 1] * H[q - n - 1]"
        " - G[p + n + 1] * H[q - n + 1])"
        " - 2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])");
    add("11.45",
        "sum(k = 0..n, (-1)^k * k^2 * G[p + k] * H[q - k])",
        "1/2 * (-1)^n * n * (n * (G[p + n + 1] * H[q - n] - G[p + n] * H[q - n - 1])"
        " - 2 * G[p + n] * H[q - n] + G[p + n - 1] * H[q - n - 1]"
        " + G[p + n + 1] * H[q - n + 1])"
        " + (-1)^n * (G[p + n - 1] * H[q - n] - G[p + n] * H[q - n - 1])"
        " - G[p - 1] * H[q] + G[p] * H[q - 1]");
    add("11.46",
        "sum(k = 0..n, (-1)^k * k^3 * G[p + k] * H[q - k])",
        "1/2 * (-1)^n * n^3 * (G[p + n + 1] * H[q - n] - G[p + n] * H[q - n - 1])"
        " - 3/4 * (-1)^n * n^2 * (2 * G[p + n] * H[q - n] - G[p + n - 1] * H[q - n - 1]"
        " - G[p + n + 1] * H[q - n + 1])"
        " + 3 * (-1)^n * n * (G[p + n - 1] * H[q - n] - G[p + n] * H[q - n - 1])"
        " - 1/8 * ((-1)^n * (34 * G[p + n] * H[q - n] - 11 * G[p + n - 1] * H[q - n - 1]"
        " - 11 * G[p + n + 1] * H[q - n + 1])"
        " - 34 * G[p] * H[q] + 11 * G[p - 1] * H[q - 1] + 11 * G[p + 1] * H[q + 1])");
    add("11.47",
        "sum(k = 0..n, (-1)^k * G[p + 2 * k] * H[q - k])",
        "1/2 * ((-1)^n * (G[p + 2 * n + 1] * H[q - n] - G[p + 2 * n - 1] * H[q - n - 1])"
        " + G[p - 2] * H[q] + G[p - 1] * H[q - 1])");
    add("11.48",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q - 2 * k])",
        "1/2 * ((-1)^n * (G[p + n] * H[q - 2 * n] - G[p + n - 2] * H[q - 2 * n - 1])"
        " + G[p] * H[q] + G[p - 2] * H[q - 1])");
    add("11.49",
        "sum(k = 0..n, (-1)^k * G[p + 2 * k] * H[q - 2 * k])",
        "1/6 * ((-1)^n * (G[p + 2 * n + 2] * H[q - 2 * n] + G[p + 2 * n] * H[q - 2 * n - 2])"
        " + G[p] * H[q + 2] + G[p - 2] * H[q])");
    add("11.50",
        "sum(k = 0..n, (-1)^k * k * G[p + 2 * k] * H[q - 2 * k])",
        "1/6 * (-1)^n * n * (G[p + 2 * n + 2] * H[q - 2 * n]"
        " + G[p + 2 * n] * H[q - 2 * n - 2])"
        " + 1/36 * ((-1)^n * (6 * G[p + 2 * n] * H[q - 2 * n]"
        " + G[p + 2 * n - 1] * H[q - 2 * n - 1] + G[p + 2 * n + 1] * H[q - 2 * n + 1])"
        " - 6 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])");
    add("11.51",
        "sum(k = 0..n, (-1)^k * k^2 * G[p + 2 * k] * H[q - 2 * k])",
        "1/6 * (-1)^n * n^2 * (G[p + 2 * n + 2] * H[q - 2 * n]"
        " + G[p + 2 * n] * H[q - 2 * n - 2])"
        " + 1/18 * (-1)^n * n * (6 * G[p + 2 * n] * H[q - 2 * n]"
        " + G[p + 2 * n - 1] * H[q - 2 * n - 1] + G[p + 2 * n + 1] * H[q - 2 * n + 1])"
        " - 1/27 * ((-1)^n * (G[p + 2 * n - 1] * H[q - 2 * n]"
        " - G[p + 2 * n] * H[q - 2 * n - 1]) - G[p - 1] * H[q] + G[p] * H[q - 1])");
    add("11.52",
        "sum(k = 0..n, (-1)^k * G[p + 3 * k] * H[q - k])",
        "1/5 * ((-1)^n * (G[p + 3 * n + 3] * H[q - n] - G[p + 3 * n] * H[q - n - 1])"
        " + G[p] * H[q + 1] - G[p - 3] * H[q])");
    add("11.53",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q - 3 * k])",
        "1/5 * ((-1)^n * (G[p + n + 1] * H[q - 3 * n] - G[p + n] * H[q - 3 * n - 3])"
        " + G[p] * H[q + 3] - G[p - 1] * H[q])");
    add("11.54",
        "sum(k = 0..n, (-1)^k * G[p + 3 * k] * H[q - 3 * k])",
        "1/4 * ((-1)^n * (G[p + 3 * n + 1] * H[q - 3 * n] + G[p + 3 * n] * H[q - 3 * n - 2])"
        " + G[p] * H[q + 1] + G[p - 2] * H[q])");
    add("11.55",
        "sum(k = 0..n, (-1)^k * G[p + 4 * k] * H[q - 4 * k])",
        "1/14 * ((-1)^n * (G[p + 4 * n + 4] * H[q - 4 * n] + G[p + 4 * n] * H[q - 4 * n - 4])"
        " + G[p] * H[q + 4] + G[p - 4] * H[q])");
    add("11.56",
        "sum(k = 0..n, (-1)^k * G[p + 5 * k] * H[q - 5 * k])",
        "1/22 * ((-1)^n * (G[p + 5 * n + 5] * H[q - 5 * n] - G[p + 5 * n] * H[q - 5 * n - 5])"
        " + G[p] * H[q + 5] - G[p - 5] * H[q])");

    note("weight 2");
    add("11.57",
        "sum(k = 0..n, 2^k * G[p + k] * H[q + k])",
        "1/3 * (2^(n + 1) * (G[p + n] * H[q + n + 1] + G[p + n - 1] * H[q + n - 2])"
        " - G[p - 1] * H[q] - G[p - 2] * H[q - 3])");
    add("11.58",
        "sum(k = 0..n, 2^k * k * G[p + k] * H[q + k])",
        "1/3 * 2^(n + 1) * n * (G[p + n] * H[q + n + 1] + G[p + n - 1] * H[q + n - 2])"
        " + 2/9 * (2^n * (2 * G[p + n] * H[q + n] - 6 * G[p + n - 1] * H[q + n - 1]"
        " - 7 * G[p + n - 2] * H[q + n - 2])"
        " - 2 * G[p] * H[q] + 6 * G[p - 1] * H[q - 1] + 7 * G[p - 2] * H[q - 2])");
    add("11.59",
        "sum(k = 0..n, 2^k * k^2 * G[p + k] * H[q + k])",
        "1/3 * 2^(n + 1) * n^2 * (G[p + n] * H[q + n + 1] + G[p + n - 1] * H[q + n - 2])"
        " + 1/9 * 2^(n + 2) * n * (2 * G[p + n] * H[q + n] - 6 * G[p + n - 1] * H[q + n - 1]"
        " - 7 * G[p + n - 2] * H[q + n - 2])"
        " + 2/27 * (2^n * (70 * G[p + n] * H[q + n] - 102 * G[p + n - 1] * H[q + n - 1]"
        " - 173 * G[p + n - 2] * H[q + n - 2])"
        " - 70 * G[p] * H[q] + 102 * G[p - 1] * H[q - 1] + 173 * G[p - 2] * H[q - 2])");
    add("11.60",
        "sum(k = 0..n, 2^k * G[p + 2 * k] * H[q + 2 * k])",
        "1/3 * (2^(n + 1) * (2 * G[p + 2 * n] * H[q + 2 * n]"
        " - G[p + 2 * n - 1] * H[q + 2 * n - 1])"
        " + 2 * G[p - 1] * H[q - 1] - G[p] * H[q])");
    add("11.61",
        "sum(k = 0..n, 2^k * G[p + k] * H[q - k])",
        "1/11 * (2^(n + 1) * (6 * G[p + n] * H[q - n] + 2 * G[p + n - 1] * H[q - n - 1]"
        " + G[p + n + 1] * H[q - n + 2])"
        " - G[p] * H[q] - 4 * G[p - 1] * H[q - 1] - 2 * G[p + 1] * H[q + 2])");

    note("weight 3");
    add("11.62",
        "sum(k = 0..n, 3^k * G[p + k] * H[q + k])",
        "1/4 * (3^(n + 1) * (G[p + n] * H[q + n + 1] - G[p + n - 2] * H[q + n - 3])"
        " - G[p - 1] * H[q] + G[p - 3] * H[q - 4])");

    note("weight 1/2");
    add("11.63",
        "sum(k = 0..n, (1/2)^k * G[p + k] * H[q + k])",
        "1/3 * ((1/2)^n * (2 * G[p + n + 2] * H[q + n + 2] - G[p + n] * H[q + n])"
        " - 2 * (2 * G[p + 1] * H[q + 1] - G[p - 1] * H[q - 1]))");
    add("11.64",
        "sum(k = 0..n, (1/2)^k * k * G[p + k] * H[q + k])",
        "1/3 * (1/2)^n * n * (2 * G[p + n + 2] * H[q + n + 2] - G[p + n] * H[q + n])"
        " + 2/9 * ((1/2)^n * (2 * G[p + n] * H[q + n] - 6 * G[p + n + 1] * H[q + n + 1]"
        " - 7 * G[p + n + 2] * H[q + n + 2])"
        " - 2 * G[p] * H[q] + 6 * G[p + 1] * H[q + 1] + 7 * G[p + 2] * H[q + 2])");
    add("11.65",
        "sum(k = 0..n, (1/2)^k * k^2 * G[p + k] * H[q + k])",
        "1/3 * (1/2)^n * n^2 * (2 * G[p + n + 2] * H[q + n + 2] - G[p + n] * H[q + n])"
        " + 4/9 * (1/2)^n * n * (2 * G[p + n] * H[q + n] - 6 * G[p + n + 1] * H[q + n + 1]"
        " - 7 * G[p + n + 2] * H[q + n + 2])"
        " - 2/27 * ((1/2)^n * (70 * G[p + n] * H[q + n] - 102 * G[p + n + 1] * H[q + n + 1]"
        " - 173 * G[p + n + 2] * H[q + n + 2])"
        " - 70 * G[p] * H[q] + 102 * G[p + 1] * H[q + 1] + 173 * G[p + 2] * H[q + 2])");
    add("11.66",
        "sum(k = 0..n, (1/2)^k * G[p + 2 * k] * H[q + 2 * k])",
        "1/3 * ((1/2)^n * (2 * G[p + 2 * n + 1] * H[q + 2 * n + 1]"
        " - G[p + 2 * n] * H[q + 2 * n])"
        " + 4 * G[p] * H[q] - 2 * G[p + 1] * H[q + 1])");
    add("11.67",
        "sum(k = 0..n, (1/2)^k * G[p + k] * H[q - k])",
        "-1/11 * ((1/2)^n * (G[p + n] * H[q - n] + 4 * G[p + n + 1] * H[q - n + 1]"
        " - 2 * G[p + n - 1] * H[q - n - 2])"
        " - 12 * G[p] * H[q] - 4 * G[p + 1] * H[q + 1] + 2 * G[p - 1] * H[q - 2])");

    note("weight 1/3");
    add("11.68",
        "sum(k = 0..n, (1/3)^k * G[p + k] * H[q + k])",
        "1/4 * ((1/3)^n * (G[p + n + 1] * H[q + n] - G[p + n + 3] * H[q + n + 4])"
        " - 3 * (G[p] * H[q - 1] - G[p + 2] * H[q + 3]))");

    note("weight -2");
    add("11.69",
        "sum(k = 0..n, (-2)^k * G[p + k] * H[q + k])",
        "1/11 * ((-1)^n * 2^(n + 1) * (8 * G[p + n] * H[q + n]"
        " - 2 * G[p + n - 1] * H[q + n - 1] - G[p + n + 1] * H[q + n + 1])"
        " + 8 * G[p - 1] * H[q - 1] - 2 * G[p - 2] * H[q - 2] - G[p] * H[q])");
    add("11.70",
        "sum(k = 0..n, (-2)^k * G[p + 2 * k] * H[q + 2 * k])",
        "1/57 * ((-1)^n * 2^(n + 1) * (18 * G[p + 2 * n] * H[q + 2 * n]"
        " - 5 * G[p + 2 * n - 1] * H[q + 2 * n - 1] + 4 * G[p + 2 * n + 1] * H[q + 2 * n + 1])"
        " + 21 * G[p] * H[q] + 10 * G[p - 1] * H[q - 1] - 8 * G[p + 1] * H[q + 1])");

    note("weight -3");
    add("11.71",
        "sum(k = 0..n, (-3)^k * G[p + k] * H[q + k])",
        "1/76 * ((-1)^n * 3^(n + 1) * (18 * G[p + n] * H[q + n]"
        " - 14 * G[p + n + 1] * H[q + n + 1] + 6 * G[p + n + 2] * H[q + n + 2])"
        " + 18 * G[p - 1] * H[q - 1] - 14 * G[p] * H[q] + 6 * G[p + 1] * H[q + 1])");

    note("weight -1/2");
    add("11.72",
        "sum(k = 0..n, (-1/2)^k * G[p + k] * H[q + k])",
        "1/11 * ((-1)^n * (1/2)^n * (4 * G[p + n + 1] * H[q + n + 1]"
        " + 2 * G[p + n - 1] * H[q + n - 1] - 5 * G[p + n] * H[q + n])"
        " + 2 * (4 * G[p] * H[q] + 2 * G[p - 2] * H[q - 2] - 5 * G[p - 1] * H[q - 1]))");
    add("11.73",
        "sum(k = 0..n, (-1/2)^k * G[p + 2 * k] * H[q + 2 * k])",
        "1/57 * ((-1)^n * (1/2)^n * (5 * G[p + 2 * n] * H[q + 2 * n]"
        " + 8 * G[p + 2 * n + 2] * H[q + 2 * n + 2] - 6 * G[p + 2 * n + 1] * H[q + 2 * n + 1])"
        " + 2 * (5 * G[p - 2] * H[q - 2] + 8 * G[p] * H[q] - 6 * G[p - 1] * H[q - 1]))");

    note("weight -1/3");
    add("11.74",
        "sum(k = 0..n, (-1/3)^k * G[p + k] * H[q + k])",
        "1/38 * ((-1)^n * (1/3)^n * (9 * G[p + n + 1] * H[q + n + 1]"
        " + 3 * G[p + n - 1] * H[q + n - 1] - 7 * G[p + n] * H[q + n])"
        " + 3 * (9 * G[p] * H[q] + 3 * G[p - 2] * H[q - 2] - 7 * G[p - 1] * H[q - 1]))");
}

// ---------------------------------------------------------------------------
// Cubic sums (ids 12.xx).
// ---------------------------------------------------------------------------

void cubic_list() {
    note("weight 1");
    add("12.01",
        "sum(k = 0..n, G[p + k] * H[q + k] * K[r + k])",
        "1/2 * (G[p + n - 1] * H[q + n] * K[r + n] + G[p + n] * H[q + n + 1] * K[r + n + 1]"
        " - G[p + n + 1] * H[q + n - 1] * K[r + n - 1]"
        " - G[p - 2] * H[q - 1] * K[r - 1] - G[p - 1] * H[q] * K[r]"
        " + G[p] * H[q - 2] * K[r - 2])");
    note("weight -1");
    add("12.02",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q + k] * K[r + k])",
        "1/2 * ((-1)^n * (G[p + n + 1] * H[q + n] * K[r + n]"
        " + G[p + n] * H[q + n + 2] * K[r + n + 2]"
        " - G[p + n + 2] * H[q + n + 1] * K[r + n + 1])"
        " + G[p] * H[q - 1] * K[r - 1] + G[p - 1] * H[q + 1] * K[r + 1]"
        " - G[p + 1] * H[q] * K[r])");
    note("weight 1");
    add("12.03",
        "sum(k = 0..n, G[p + k] * H[q + k] * K[r - k])",
        "1/2 * (G[p + n + 2] * H[q + n + 2] * K[r - n] - G[p + n] * H[q + n] * K[r - n - 1]"
        " - G[p + n + 1] * H[q + n + 1] * K[r - n - 2]"
        " - G[p + 1] * H[q + 1] * K[r + 1] + G[p - 1] * H[q - 1] * K[r]"
        " + G[p] * H[q] * K[r - 1])");
    note("weight -1; final factor K[r + 2] verified numerically");
    add("12.04",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q + k] * K[r - k])",
        "1/2 * ((-1)^n * (G[p + n + 1] * H[q + n + 1] * K[r - n]"
        " + G[p + n - 1] * H[q + n - 1] * K[r - n - 1]"
        " - G[p + n] * H[q + n] * K[r - n + 1])"
        " + G[p] * H[q] * K[r + 1] + G[p - 2] * H[q - 2] * K[r]"
        " - G[p - 1] * H[q - 1] * K[r + 2])");
    note("weight 1");
    add("12.05",
        "sum(k = 0..n, G[p + k] * H[q - k] * K[r - k])",
        "1/2 * (G[p + n + 2] * H[q - n] * K[r - n] + G[p + n - 2] * H[q - n + 1] * K[r - n + 1]"
        " - G[p + n] * H[q - n + 2] * K[r - n + 2]"
        " - G[p + 1] * H[q + 1] * K[r + 1] - G[p - 3] * H[q + 2] * K[r + 2]"
        " + G[p - 1] * H[q + 3] * K[r + 3])");
    note("weight -1");
    add("12.06",
        "sum(k = 0..n, (-1)^k * G[p + k] * H[q - k] * K[r - k])",
        "1/2 * ((-1)^n * (G[p + n + 1] * H[q - n] * K[r - n]"
        " + G[p + n] * H[q - n - 2] * K[r - n - 2]"
        " - G[p + n + 2] * H[q - n - 1] * K[r - n - 1])"
        " + G[p] * H[q + 1] * K[r + 1] + G[p - 1] * H[q - 1] * K[r - 1]"
        " - G[p + 1] * H[q] * K[r])");
    note("weight 1");
    add("12.07",
        "sum(k = 0..n, G[p + 2 * k] * H[q + 2 * k] * K[r + 2 * k])",
        "1/4 * (G[p + 2 * n + 2] * H[q + 2 * n + 2] * K[r + 2 * n + 2]"
        " - 3 * G[p + 2 * n + 1] * H[q + 2 * n + 1] * K[r + 2 * n + 1]"
        " - G[p + 2 * n] * H[q + 2 * n] * K[r + 2 * n]"
        " - G[p] * H[q] * K[r] + 3 * G[p - 1] * H[q - 1] * K[r - 1]"
        " + G[p - 2] * H[q - 2] * K[r - 2])");

    note("weight 1; Fibonacci cubes");
    add("12.08",
        "sum(k = 0..n, F[k]^3)",
        "1/2 * (F[n] * F[n + 1]^2 - (-1)^n * F[n - 1] + 1)");
    add("12.09",
        "sum(k = 0..n, F[k]^3)",
        "1/10 * (F[3 * n + 2] - 6 * (-1)^n * F[n - 1] + 5)");
    add("12.10",
        "sum(k = 0..n, k * F[k]^3)",
        "1/20 * (2 * n * F[3 * n + 2] - F[3 * n + 1]"
        " - 12 * (-1)^n * (n * F[n - 1] + F[n - 3]) + 25)");
    add("12.11",
        "sum(k = 0..n, k^2 * F[k]^3)",
        "1/20 * (2 * n^2 * F[3 * n + 2] - 2 * n * F[3 * n + 1] + F[3 * n + 2]"
        " - 12 * (-1)^n * (n^2 * F[n - 1] + 2 * n * F[n - 3] - F[n - 6]) + 95)");
    note("weight 1/2; Fibonacci cubes");
    add("12.12",
        "sum(k = 0..n, (1/2)^k * F[k]^3)",
        "1/25 * ((1/2)^n * (F[3 * n + 2] + F[3 * n + 4]"
        " - 3 * (-1)^n * (F[n - 1] + F[n + 1])) + 2)");
    note("weight 1/3; Fibonacci cubes");
    add("12.13",
        "sum(k = 0..n, (1/3)^k * F[k]^3)",
        "1/110 * ((1/3)^n * (11 * F[3 * n + 4] - 6 * (-1)^n * (3 * F[n + 1] - F[n])) - 15)");
    note("weight 1; even-index Fibonacci cubes");
    add("12.14",
        "sum(k = 0..n, F[2 * k]^3)",
        "1/20 * (F[6 * n + 3] - 12 * F[2 * n + 1] + 10)");
    note("weight -1; Fibonacci cubes");
    add("12.15",
        "sum(k = 0..n, (-1)^k * F[k]^3)",
        "1/2 * ((-1)^n * F[n]^2 * F[n + 1] - F[n + 2] + 1)");
    add("12.16",
        "sum(k = 0..n, (-1)^k * F[k]^3)",
        "1/10 * ((-1)^n * F[3 * n + 1] - 6 * F[n + 2] + 5)");
    add("12.17",
        "sum(k = 0..n, (-1)^k * k * F[k]^3)",
        "1/20 * ((-1)^n * (2 * n * F[3 * n + 1] + F[3 * n - 1])"
        " - 12 * (n * F[n + 2] - F[n + 3]) - 25)");
    add("12.18",
        "sum(k = 0..n, (-1)^k * k^2 * F[k]^3)",
        "1/20 * ((-1)^n * (2 * n^2 * F[3 * n + 1] + 2 * n * F[3 * n - 1] - F[3 * n - 2])"
        " - 12 * (n^2 * F[n + 2] - 2 * n * F[n + 3] + F[n + 6]) + 95)");
    note("weight 1; Lucas cubes");
    add("12.19",
        "sum(k = 0..n, L[k]^3)",
        "1/2 * (L[n] * L[n + 1]^2 + 5 * (-1)^n * L[n - 1] + 19)");
    add("12.20",
        "sum(k = 0..n, L[k]^3)",
        "1/2 * (L[3 * n + 2] + 6 * (-1)^n * L[n - 1] + 19)");
    add("12.21",
        "sum(k = 0..n, k * L[k]^3)",
        "1/4 * (2 * n * L[3 * n + 2] - L[3 * n + 1]"
        " + 12 * (-1)^n * (n * L[n - 1] + L[n - 3]) + 49)");
    add("12.22",
        "sum(k = 0..n, k^2 * L[k]^3)",
        "1/4 * (2 * n^2 * L[3 * n + 2] - 2 * n * L[3 * n + 1] + L[3 * n + 2]"
        " + 12 * (-1)^n * (n^2 * L[n - 1] + 2 * n * L[n - 3] - L[n - 6]) + 213)");
    note("weight 1; Fibonacci fourth powers");
    add("12.23",
        "sum(k = 0..n, F[k]^4)",
        "1/125 * (L[4 * n + 4] - L[4 * n] - 4 * (-1)^n * (L[2 * n] + L[2 * n + 2])"
        " + 30 * n + 15)");
    note("weight 1; Lucas fourth powers");
    add("12.24",
        "sum(k = 0..n, L[k]^4)",
        "1/5 * (L[4 * n + 4] - L[4 * n] + 4 * (-1)^n * (L[2 * n] + L[2 * n + 2])"
        " + 30 * n + 55)");
}

// ---------------------------------------------------------------------------
// Quadratic sums with binomial coefficients (ids 13.xx).
// ---------------------------------------------------------------------------

void binomial_quadratic_list() {
    note("binomial, weight 1");
    add("13.01",
        "sum(k = 0..n, binom(n, k) * G[p + k] * H[q + k])",
        "1/5 * (floorpow(5, n, 2) * (2 * G[p + n] * (H[q + 1] - (-1)^n * H[q - 1])"
        " + G[p + n - 1] * (H[q] - (-1)^n * H[q - 2])"
        " + G[p + n + 1] * (H[q + 2] - (-1)^n * H[q]))"
        " + kronecker(n, 0) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1]))");
    add("13.02",
        "sum(k = 0..n, binom(n, k) * k * G[p + k] * H[q + k])",
        "1/5 * (floorpow(5, n - 1, 2) * n * (2 * G[p + n] * (H[q + 2] + (-1)^n * H[q])"
        " + G[p + n - 1] * (H[q + 1] + (-1)^n * H[q - 1])"
        " + G[p + n + 1] * (H[q + 3] + (-1)^n * H[q + 1]))"
        " - kronecker(n, 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1]))");
    add("13.03",
        "sum(k = 0..n, binom(n, k) * k^2 * G[p + k] * H[q + k])",
        "1/5 * (floorpow(5, n - 1, 2) * n * (2 * G[p + n] * (H[q + 2] + (-1)^n * H[q])"
        " + G[p + n - 1] * (H[q + 1] + (-1)^n * H[q - 1])"
        " + G[p + n + 1] * (H[q + 3] + (-1)^n * H[q + 1]))"
        " + 1/5 * floorpow(5, n, 2) * n * (n - 1)"
        " * (2 * G[p + n] * (H[q + 3] - (-1)^n * H[q + 1])"
        " + G[p + n - 1] * (H[q + 2] - (-1)^n * H[q])"
        " + G[p + n + 1] * (H[q + 4] - (-1)^n * H[q + 2]))"
        " + (2 * kronecker(n, 2) - kronecker(n, 1))"
        " * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("13.04",
        "sum(k = 0..n, binom(n, k) * k^3 * G[p + k] * H[q + k])",
        "1/5 * (1/5 * floorpow(5, n - 1, 2) * n"
        " * (5 * (2 * G[p + n] * (H[q + 2] + (-1)^n * H[q])"
        " + G[p + n - 1] * (H[q + 1] + (-1)^n * H[q - 1])"
        " + G[p + n + 1] * (H[q + 3] + (-1)^n * H[q + 1]))"
        " + (n - 1) * (n - 2) * (2 * G[p + n] * (H[q + 4] + (-1)^n * H[q + 2])"
        " + G[p + n - 1] * (H[q + 3] + (-1)^n * H[q + 1])"
        " + G[p + n + 1] * (H[q + 5] + (-1)^n * H[q + 3])))"
        " + 1/5 * floorpow(5, n, 2) * 3 * n * (n - 1)"
        " * (2 * G[p + n] * (H[q + 3] - (-1)^n * H[q + 1])"
        " + G[p + n - 1] * (H[q + 2] - (-1)^n * H[q])"
        " + G[p + n + 1] * (H[q + 4] - (-1)^n * H[q + 2]))"
        " + (6 * kronecker(n, 2) - kronecker(n, 1) - 6 * kronecker(n, 3))"
        " * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("13.05",
        "sum(k = 0..n, binom(n, k) * G[p + 2 * k] * H[q + k])",
        "1/5 * (2^n * (2 * G[p + n] * H[q + n] + G[p + n - 1] * H[q + n - 1]"
        " + G[p + n + 1] * H[q + n + 1])"
        " + 3 * G[p] * H[q + n] - G[p - 1] * H[q + n - 1] - G[p + 1] * H[q + n + 1])");
    add("13.06",
        "sum(k = 0..n, binom(n, k) * k * G[p + 2 * k] * H[q + k])",
        "1/5 * n * (2^(n - 1) * (2 * G[p + n + 1] * H[q + n] + G[p + n] * H[q + n - 1]"
        " + G[p + n + 2] * H[q + n + 1])"
        " + 3 * G[p + 2] * H[q + n] - G[p + 1] * H[q + n - 1] - G[p + 3] * H[q + n + 1])");
    add("13.07",
        "sum(k = 0..n, binom(n, k) * k^2 * G[p + 2 * k] * H[q + k])",
        "1/5 * n * (2^(n - 2) * (n * (2 * G[p + n + 2] * H[q + n]"
        " + G[p + n + 1] * H[q + n - 1] + G[p + n + 3] * H[q + n + 1])"
        " + 2 * G[p + n - 1] * H[q + n] + G[p + n - 2] * H[q + n - 1]"
        " + G[p + n] * H[q + n + 1])"
        " + n * (3 * G[p + 4] * H[q + n] - G[p + 3] * H[q + n - 1]"
        " - G[p + 5] * H[q + n + 1])"
        " - 3 * G[p + 3] * H[q + n] + G[p + 2] * H[q + n - 1] + G[p + 4] * H[q + n + 1])");
    add("13.08",
        "sum(k = 0..n, binom(n, k) * G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * (3^n * (2 * G[p + n] * H[q + n] + G[p + n - 1] * H[q + n - 1]"
        " + G[p + n + 1] * H[q + n + 1])"
        " + 2^n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("13.09",
        "sum(k = 0..n, binom(n, k) * k * G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * n * (3^(n - 1) * (2 * G[p + n + 1] * H[q + n + 1] + G[p + n] * H[q + n]"
        " + G[p + n + 2] * H[q + n + 2])"
        " + 2^(n - 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("13.10",
        "sum(k = 0..n, binom(n, k) * k^2 * G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * n * (3^(n - 2) * (n * (2 * G[p + n + 2] * H[q + n + 2]"
        " + G[p + n + 1] * H[q + n + 1] + G[p + n + 3] * H[q + n + 3])"
        " + 2 * G[p + n] * H[q + n] + G[p + n - 1] * H[q + n - 1]"
        " + G[p + n + 1] * H[q + n + 1])"
        " + 2^(n - 2) * (n + 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1]))");
    add("13.11",
        "sum(k = 0..n, binom(n, k) * G[p + k] * H[q - k])",
        "1/5 * (2^n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 3 * G[p] * H[q - n] - G[p - 1] * H[q - n - 1] - G[p + 1] * H[q - n + 1])");
    add("13.12",
        "sum(k = 0..n, binom(n, k) * k * G[p + k] * H[q - k])",
        "1/5 * n * (2^(n - 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])"
        " + 3 * G[p + 1] * H[q - n] - G[p] * H[q - n - 1] - G[p + 2] * H[q - n + 1])");
    add("13.13",
        "sum(k = 0..n, binom(n, k) * k^2 * G[p + k] * H[q - k])",
        "1/5 * n * (2^(n - 2) * (n + 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])"
        " + n * (3 * G[p + 2] * H[q - n] - G[p + 1] * H[q - n - 1]"
        " - G[p + 3] * H[q - n + 1])"
        " - 3 * G[p] * H[q - n] + G[p - 1] * H[q - n - 1] + G[p + 1] * H[q - n + 1])");
    add("13.14",
        "sum(k = 0..n, binom(n, k) * k^3 * G[p + k] * H[q - k])",
        "1/5 * n * (2^(n - 3) * n * (n + 3) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])"
        " + n^2 * (3 * G[p + 3] * H[q - n] - G[p + 2] * H[q - n - 1]"
        " - G[p + 4] * H[q - n + 1])"
        " - (3 * n - 2) * (3 * G[p + 1] * H[q - n] - G[p] * H[q - n - 1]"
        " - G[p + 2] * H[q - n + 1])"
        " - 3 * G[p] * H[q - n] + G[p - 1] * H[q - n - 1] + G[p + 1] * H[q - n + 1])");
    add("13.15",
        "sum(k = 0..n, binom(n, k) * G[p + 2 * k] * H[q - k])",
        "1/5 * (2 * G[p + n] * H[q + n] + G[p + n - 1] * H[q + n - 1]"
        " + G[p + n + 1] * H[q + n + 1]"
        " + 2^n * (3 * G[p] * H[q - n] - G[p - 1] * H[q - n - 1]"
        " - G[p + 1] * H[q - n + 1]))");
    add("13.16",
        "sum(k = 0..n, binom(n, k) * G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * (2^n * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " + 3^n * (3 * G[p + 2 * n] * H[q] - G[p + 2 * n - 1] * H[q - 1]"
        " - G[p + 2 * n + 1] * H[q + 1]))");
    add("13.17",
        "sum(k = 0..n, binom(n, k) * k * G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * n * (2^(n - 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])"
        " + 3^(n - 1) * (3 * G[p + 2 * n + 2] * H[q] - G[p + 2 * n + 1] * H[q - 1]"
        " - G[p + 2 * n + 3] * H[q + 1]))");
    add("13.18",
        "sum(k = 0..n, binom(n, k) * k^2 * G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * n * (2^(n - 2) * (n + 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1])"
        " + 3^(n - 2) * (n * (3 * G[p + 2 * n + 4] * H[q] - G[p + 2 * n + 3] * H[q - 1]"
        " - G[p + 2 * n + 5] * H[q + 1])"
        " + 3 * G[p + 2 * n] * H[q] - G[p + 2 * n - 1] * H[q - 1]"
        " - G[p + 2 * n + 1] * H[q + 1]))");

    note("binomial, weight -1");
    add("13.19",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + k] * H[q + k])",
        "1/5 * ((-1)^n * (2 * G[p + n] * H[q] + G[p + n - 1] * H[q - 1]"
        " + G[p + n + 1] * H[q + 1])"
        " + 2^n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("13.20",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k * G[p + k] * H[q + k])",
        "1/5 * n * ((-1)^n * (2 * G[p + n + 1] * H[q] + G[p + n] * H[q - 1]"
        " + G[p + n + 2] * H[q + 1])"
        " + 2^(n - 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]))");
    add("13.21",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k^2 * G[p + k] * H[q + k])",
        "1/5 * n * ((-1)^n * (n * (2 * G[p + n + 2] * H[q] + G[p + n + 1] * H[q - 1]"
        " + G[p + n + 3] * H[q + 1])"
        " - 2 * G[p + n] * H[q] - G[p + n - 1] * H[q - 1] - G[p + n + 1] * H[q + 1])"
        " + 2^(n - 2) * (n + 1) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1]))");
    add("13.22",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k^3 * G[p + k] * H[q + k])",
        "1/5 * n * ((-1)^n * (n^2 * (2 * G[p + n + 3] * H[q] + G[p + n + 2] * H[q - 1]"
        " + G[p + n + 4] * H[q + 1])"
        " - (3 * n - 2) * (2 * G[p + n + 1] * H[q] + G[p + n] * H[q - 1]"
        " + G[p + n + 2] * H[q + 1])"
        " - 2 * G[p + n] * H[q] - G[p + n - 1] * H[q - 1] - G[p + n + 1] * H[q + 1])"
        " + 2^(n - 3) * n * (n + 3) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1]))");
    add("13.23",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + 2 * k] * H[q + k])",
        "1/5 * ((-1)^n * 2^n * (2 * G[p + n] * H[q] + G[p + n - 1] * H[q - 1]"
        " + G[p + n + 1] * H[q + 1])"
        " + 3 * G[p + 2 * n] * H[q] - G[p + 2 * n - 1] * H[q - 1]"
        " - G[p + 2 * n + 1] * H[q + 1])");
    add("13.24",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k * G[p + 2 * k] * H[q + k])",
        "1/5 * n * ((-1)^n * 2^(n - 1) * (2 * G[p + n + 2] * H[q] + G[p + n + 1] * H[q - 1]"
        " + G[p + n + 3] * H[q + 1])"
        " + 3 * G[p + 2 * n - 1] * H[q] - G[p + 2 * n - 2] * H[q - 1]"
        " - G[p + 2 * n] * H[q + 1])");
    add("13.25",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k^2 * G[p + 2 * k] * H[q + k])",
        "1/5 * n * ((-1)^n * 2^(n - 2) * (n * (2 * G[p + n + 4] * H[q]"
        " + G[p + n + 3] * H[q - 1] + G[p + n + 5] * H[q + 1])"
        " - 2 * G[p + n + 1] * H[q] - G[p + n] * H[q - 1] - G[p + n + 2] * H[q + 1])"
        " + n * (3 * G[p + 2 * n - 2] * H[q] - G[p + 2 * n - 3] * H[q - 1]"
        " - G[p + 2 * n - 1] * H[q + 1])"
        " + 3 * G[p + 2 * n - 3] * H[q] - G[p + 2 * n - 4] * H[q - 1]"
        " - G[p + 2 * n - 2] * H[q + 1])");
    add("13.26",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + 2 * k] * H[q + 2 * k])",
        "1/5 * ((-1)^n * floorpow(5, n, 2)"
        " * (2 * G[p + n] * (H[q + n + 1] - (-1)^n * H[q + n - 1])"
        " + G[p + n - 1] * (H[q + n] - (-1)^n * H[q + n - 2])"
        " + G[p + n + 1] * (H[q + n + 2] - (-1)^n * H[q + n]))"
        " + kronecker(n, 0) * (3 * G[p] * H[q] - G[p - 1] * H[q - 1]"
        " - G[p + 1] * H[q + 1]))");
    add("13.27",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + k] * H[q - k])",
        "1/5 * (floorpow(5, n, 2) * (3 * (G[p + n + 1] - (-1)^n * G[p + n - 1]) * H[q]"
        " - (G[p + n] - (-1)^n * G[p + n - 2]) * H[q - 1]"
        " - (G[p + n + 2] - (-1)^n * G[p + n]) * H[q + 1])"
        " + kronecker(n, 0) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1]))");
    add("13.28",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k * G[p + k] * H[q - k])",
        "1/5 * (floorpow(5, n - 1, 2) * n"
        " * (3 * (G[p + n + 2] + (-1)^n * G[p + n]) * H[q]"
        " - (G[p + n + 1] + (-1)^n * G[p + n - 1]) * H[q - 1]"
        " - (G[p + n + 3] + (-1)^n * G[p + n + 1]) * H[q + 1])"
        " - kronecker(n, 1) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1]))");
    add("13.29",
        "sum(k = 0..n, binom(n, k) * (-1)^k * k^2 * G[p + k] * H[q - k])",
        "1/5 * (floorpow(5, n - 1, 2) * n"
        " * (3 * (G[p + n + 2] + (-1)^n * G[p + n]) * H[q]"
        " - (G[p + n + 1] + (-1)^n * G[p + n - 1]) * H[q - 1]"
        " - (G[p + n + 3] + (-1)^n * G[p + n + 1]) * H[q + 1])"
        " + 1/5 * floorpow(5, n, 2) * n * (n - 1)"
        " * (3 * (G[p + n + 3] - (-1)^n * G[p + n + 1]) * H[q]"
        " - (G[p + n + 2] - (-1)^n * G[p + n]) * H[q - 1]"
        " - (G[p + n + 4] - (-1)^n * G[p + n + 2]) * H[q + 1])"
        " + (2 * kronecker(n, 2) - kronecker(n, 1))"
        " * (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1]))");
    add("13.30",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + 2 * k] * H[q - k])",
        "1/5 * ((-1)^n * (2 * G[p - n] * H[q] + G[p - n - 1] * H[q - 1]"
        " + G[p - n + 1] * H[q + 1])"
        " + 2^n * (3 * G[p + 2 * n] * H[q] - G[p + 2 * n - 1] * H[q - 1]"
        " - G[p + 2 * n + 1] * H[q + 1]))");
    add("13.31",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + 2 * k] * H[q - 2 * k])",
        "1/5 * (floorpow(5, n, 2) * (3 * (G[p + n + 1] - (-1)^n * G[p + n - 1]) * H[q - n]"
        " - (G[p + n] - (-1)^n * G[p + n - 2]) * H[q - n - 1]"
        " - (G[p + n + 2] - (-1)^n * G[p + n]) * H[q - n + 1])"
        " + kronecker(n, 0) * (2 * G[p] * H[q] + G[p - 1] * H[q - 1]"
        " + G[p + 1] * H[q + 1]))");
}

// ---------------------------------------------------------------------------
// Cubic sums with binomial coefficients (ids 14.xx).
// ---------------------------------------------------------------------------

void binomial_cubic_list() {
    note("binomial cubic, weight 1");
    add("14.01",
        "sum(k = 0..n, binom(n, k) * G[p + k] * H[q + k] * K[r + k])",
        "1/5 * (2^n * (G[p] * H[q + n] * K[r + n] + G[p + 1] * H[q + n + 1] * K[r + n + 1]"
        " - G[p - 1] * H[q + n - 1] * K[r + n - 1])"
        " + G[p] * H[q] * K[r + n] + G[p - 1] * H[q - 1] * K[r + n + 1]"
        " - G[p + 1] * H[q + 1] * K[r + n - 1]"
        " + (-1)^n * (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " * K[r - n])");
    note("binomial cubic, weight -1");
    add("14.02",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + k] * H[q + k] * K[r + k])",
        "1/5 * ((-1)^n * 2^n * (G[p] * H[q + n] * K[r] + G[p + 1] * H[q + n + 1] * K[r + 1]"
        " - G[p - 1] * H[q + n - 1] * K[r - 1])"
        " + G[p] * H[q + 2 * n] * K[r] + G[p - 1] * H[q + 2 * n - 1] * K[r + 1]"
        " - G[p + 1] * H[q + 2 * n + 1] * K[r - 1]"
        " + (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " * K[r + 2 * n])");
    note("binomial cubic, weight 1");
    add("14.03",
        "sum(k = 0..n, binom(n, k) * G[p + k] * H[q + k] * K[r - k])",
        "1/5 * (2^n * (G[p] * H[q] * K[r - n] + G[p - 1] * H[q - 1] * K[r - n + 1]"
        " - G[p + 1] * H[q + 1] * K[r - n - 1])"
        " + G[p] * H[q + n] * K[r + n] + G[p + 1] * H[q + n + 1] * K[r + n + 1]"
        " - G[p - 1] * H[q + n - 1] * K[r + n - 1]"
        " + (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1])"
        " * K[r - 2 * n])");
    note("binomial cubic, weight -1");
    add("14.04",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + k] * H[q + k] * K[r - k])",
        "1/5 * (2^n * (G[p + n] * H[q + n] * K[r] + G[p + n - 1] * H[q + n - 1] * K[r + 1]"
        " - G[p + n + 1] * H[q + n + 1] * K[r - 1])"
        " + (-1)^n * (G[p] * H[q - n] * K[r] + G[p + 1] * H[q - n + 1] * K[r + 1]"
        " - G[p - 1] * H[q - n - 1] * K[r - 1])"
        " + (3 * G[p] * H[q] - G[p - 1] * H[q - 1] - G[p + 1] * H[q + 1]) * K[r + n])");
    note("binomial cubic, weight 1");
    add("14.05",
        "sum(k = 0..n, binom(n, k) * G[p + k] * H[q - k] * K[r - k])",
        "1/5 * (2^n * (G[p + 2 * n] * H[q] * K[r] + G[p + 2 * n + 1] * H[q - 1] * K[r - 1]"
        " - G[p + 2 * n - 1] * H[q + 1] * K[r + 1])"
        " + G[p] * H[q + n] * K[r] + G[p - 1] * H[q + n + 1] * K[r - 1]"
        " - G[p + 1] * H[q + n - 1] * K[r + 1]"
        " + (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1]) * K[r + n])");
    note("binomial cubic, weight -1");
    add("14.06",
        "sum(k = 0..n, binom(n, k) * (-1)^k * G[p + k] * H[q - k] * K[r - k])",
        "1/5 * (2^n * (G[p] * H[q] * K[r - n] + G[p + 1] * H[q - 1] * K[r - n - 1]"
        " - G[p - 1] * H[q + 1] * K[r - n + 1])"
        " + G[p + n] * H[q] * K[r + n] + G[p + n - 1] * H[q + 1] * K[r + n - 1]"
        " - G[p + n + 1] * H[q - 1] * K[r + n + 1]"
        " + (2 * G[p] * H[q] + G[p - 1] * H[q - 1] + G[p + 1] * H[q + 1])"
        " * K[r - 2 * n])");
}

}  // namespace

int main(int argc, char** argv) {
    const char* path = argc > 1 ? argv[1] : "data/catalog.json";
    quadratic_list();
    cubic_list();
    binomial_quadratic_list();
    binomial_cubic_list();
    try {
        fibsum::save_catalog(records, path);
    } catch (const fibsum::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    std::printf("wrote %zu records to %s\n", records.size(), path);
    return 0;
}
