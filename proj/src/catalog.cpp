#include "fibsum/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "fibsum/errors.hpp"
#include "fibsum/identity_kernel.hpp"
#include "fibsum/parallel.hpp"
#include "json.hpp"

namespace fibsum {

namespace {

using nlohmann::json;

const char* kRecordKeys[] = {"constraint", "id", "lhs", "note", "rhs", "seeds", "vars"};

bool is_valid_var_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    // Single capital sequence letters and call names cannot appear as plain
    // symbols in the grammar, so they cannot be variables either.
    if (name.size() == 1 && std::string("FLGHK").find(name[0]) != std::string::npos)
        return false;
    if (name == "sum" || name == "binom" || name == "kronecker" || name == "floorpow")
        return false;
    return true;
}

struct ParsedRecord {
    ExprPtr lhs;
    ExprPtr rhs;
    ExprPtr constraint;
};

// Shared structural validation; returns the parsed expressions so callers can
// reuse them.  `where` identifies the record in error messages.
ParsedRecord validate_record(const IdentityRecord& rec, const std::string& where) {
    if (rec.id.empty()) throw SchemaError(where + ": id must be a nonempty string");
    for (const auto& [name, range] : rec.vars) {
        if (!is_valid_var_name(name))
            throw SchemaError(where + ": invalid variable name '" + name + "'");
        if (range.first > range.second)
            throw SchemaError(where + ": variable '" + name + "' has an empty range");
    }
    for (const auto& [letter, seed] : rec.seeds) {
        (void)seed;
        if (letter != 'G' && letter != 'H' && letter != 'K')
            throw SchemaError(where + ": seed letter '" + std::string(1, letter) +
                              "' is not one of G, H, K");
    }

    ParsedRecord parsed;
    auto parse_field = [&](const std::string& field, const std::string& text) {
        try {
            return parse(text);
        } catch (const SyntaxError& e) {
            throw SchemaError(where + ": " + field + " does not parse: " + e.what());
        }
    };
    parsed.lhs = parse_field("lhs", rec.lhs);
    parsed.rhs = parse_field("rhs", rec.rhs);
    parsed.constraint = parse_field("constraint", rec.constraint);

    std::set<std::string> used;
    for (const ExprPtr& e : {parsed.lhs, parsed.rhs, parsed.constraint})
        for (const std::string& s : free_symbols(*e)) used.insert(s);
    for (const std::string& s : used)
        if (!rec.vars.count(s))
            throw SchemaError(where + ": symbol '" + s + "' is not declared in vars");
    for (const auto& [name, range] : rec.vars) {
        (void)range;
        if (!used.count(name))
            throw SchemaError(where + ": declared variable '" + name + "' is unused");
    }
    return parsed;
}

long long json_int(const json& j, const std::string& where, const std::string& what) {
    if (!j.is_number_integer())
        throw SchemaError(where + ": " + what + " must be an integer");
    return j.get<long long>();
}

std::string json_str(const json& j, const std::string& where, const std::string& what) {
    if (!j.is_string()) throw SchemaError(where + ": " + what + " must be a string");
    return j.get<std::string>();
}

IdentityRecord record_from_json(const json& j, std::size_t index) {
    std::string where = "record #" + std::to_string(index);
    if (!j.is_object()) throw SchemaError(where + ": must be a JSON object");
    if (j.contains("id") && j["id"].is_string())
        where = "record " + j["id"].get<std::string>();

    for (const char* key : kRecordKeys)
        if (!j.contains(key))
            throw SchemaError(where + ": missing field '" + std::string(key) + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : kRecordKeys) known = known || it.key() == key;
        if (!known) throw SchemaError(where + ": unexpected field '" + it.key() + "'");
    }

    IdentityRecord rec;
    rec.id = json_str(j["id"], where, "id");
    rec.lhs = json_str(j["lhs"], where, "lhs");
    rec.rhs = json_str(j["rhs"], where, "rhs");
    rec.constraint = json_str(j["constraint"], where, "constraint");
    rec.note = json_str(j["note"], where, "note");

    const json& vars = j["vars"];
    if (!vars.is_object()) throw SchemaError(where + ": vars must be an object");
    for (auto it = vars.begin(); it != vars.end(); ++it) {
        const json& range = it.value();
        if (!range.is_array() || range.size() != 2)
            throw SchemaError(where + ": range of '" + it.key() +
                              "' must be an array [lo, hi]");
        long long lo = json_int(range[0], where, "range of '" + it.key() + "'");
        long long hi = json_int(range[1], where, "range of '" + it.key() + "'");
        rec.vars[it.key()] = {lo, hi};
    }

    const json& seeds = j["seeds"];
    if (!seeds.is_object()) throw SchemaError(where + ": seeds must be an object");
    for (auto it = seeds.begin(); it != seeds.end(); ++it) {
        if (it.key().size() != 1)
            throw SchemaError(where + ": seed letter '" + it.key() +
                              "' must be a single character");
        const json& pair = it.value();
        if (!pair.is_array() || pair.size() != 2)
            throw SchemaError(where + ": seed '" + it.key() +
                              "' must be an array [g0, g1]");
        Seed s{BigInt(json_int(pair[0], where, "seed '" + it.key() + "'")),
               BigInt(json_int(pair[1], where, "seed '" + it.key() + "'"))};
        rec.seeds[it.key()[0]] = s;
    }

    validate_record(rec, where);
    return rec;
}

long long seed_component(const BigInt& v, const std::string& where) {
    if (v < std::numeric_limits<long long>::min() ||
        v > std::numeric_limits<long long>::max())
        throw SchemaError(where + ": seed component out of range");
    return v.convert_to<long long>();
}

}  // namespace

std::string catalog_to_json(const std::vector<IdentityRecord>& records) {
    std::set<std::string> ids;
    json arr = json::array();
    for (const IdentityRecord& rec : records) {
        const std::string where = "record " + (rec.id.empty() ? "<empty id>" : rec.id);
        validate_record(rec, where);
        if (!ids.insert(rec.id).second)
            throw SchemaError(where + ": duplicate id");
        json o;
        o["constraint"] = print(parse(rec.constraint));
        o["id"] = rec.id;
        o["lhs"] = print(parse(rec.lhs));
        o["note"] = rec.note;
        o["rhs"] = print(parse(rec.rhs));
        json seeds = json::object();
        for (const auto& [letter, seed] : rec.seeds)
            seeds[std::string(1, letter)] = {seed_component(seed.g0, where),
                                             seed_component(seed.g1, where)};
        o["seeds"] = seeds;
        json vars = json::object();
        for (const auto& [name, range] : rec.vars)
            vars[name] = {range.first, range.second};
        o["vars"] = vars;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<IdentityRecord> catalog_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw SchemaError("catalog must be a JSON array of records");

    std::vector<IdentityRecord> records;
    std::set<std::string> ids;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        IdentityRecord rec = record_from_json(doc[i], i);
        if (!ids.insert(rec.id).second)
            throw SchemaError("record " + rec.id + ": duplicate id");
        records.push_back(std::move(rec));
    }
    return records;
}

void save_catalog(const std::vector<IdentityRecord>& records, const std::string& path) {
    std::string text = catalog_to_json(records);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<IdentityRecord> load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return catalog_from_json(buf.str());
}

bool VerifyReport::all_passed() const {
    for (const RecordReport& r : records)
        if (!r.passed) return false;
    return true;
}

long long VerifyReport::total_checked() const {
    long long total = 0;
    for (const RecordReport& r : records) total += r.checked;
    return total;
}

namespace {

struct GridAxis {
    std::string name;
    long long lo = 0;
    long long hi = 0;
};

std::string seed_text(const Seed& s) {
    return "(" + s.g0.str() + "," + s.g1.str() + ")";
}

// Verification state for one record at one seed assignment.
struct PointChecker {
    const std::vector<GridAxis>& axes;
    const std::vector<char>& unpinned;
    const std::vector<std::size_t>& seedIndex;
    RecordReport& rep;
    std::optional<std::vector<long long>>& bestKey;

    // Records a failing point, keeping only the lexicographically smallest
    // key (variable values in name order, then seed indices).
    void fail(const std::vector<long long>& values, const std::string& detail,
              const EvalContext& ctx) {
        std::vector<long long> key = values;
        for (std::size_t idx : seedIndex) key.push_back(static_cast<long long>(idx));
        if (bestKey && !(key < *bestKey)) {
            rep.passed = false;
            return;
        }
        std::ostringstream out;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            if (i) out << ", ";
            out << axes[i].name << "=" << values[i];
        }
        for (char c : unpinned)
            out << (axes.empty() && c == unpinned.front() ? "" : ", ") << c << "="
                << seed_text(ctx.seeds.at(c));
        out << ": " << detail;
        rep.passed = false;
        rep.first_failure = out.str();
        bestKey = std::move(key);
    }
};

RecordReport verify_record(const IdentityRecord& rec, int gridScale) {
    RecordReport rep;
    rep.id = rec.id;
    ParsedRecord parsed = validate_record(rec, "record " + rec.id);
    const ExprPtr& lhs = parsed.lhs;
    const ExprPtr& rhs = parsed.rhs;
    const ExprPtr& cons = parsed.constraint;

    std::vector<GridAxis> axes;
    for (const auto& [name, range] : rec.vars) {
        GridAxis axis{name, range.first, range.second};
        if (gridScale >= 0) {
            if (name == "n") {
                axis.lo = 0;
                axis.hi = 2LL * gridScale + 4;
            } else {
                axis.lo = -gridScale;
                axis.hi = gridScale;
            }
        }
        axes.push_back(axis);
    }

    std::set<char> letters;
    for (const ExprPtr& e : {lhs, rhs, cons})
        for (char c : sequence_letters(*e)) letters.insert(c);
    std::vector<char> unpinned;
    for (char c : letters)
        if (c != 'F' && c != 'L' && !rec.seeds.count(c)) unpinned.push_back(c);

    const std::vector<Seed>& seedSet = standard_seeds();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < unpinned.size(); ++i) combos *= seedSet.size();

    // The sum over k = 0..n can be accumulated incrementally across the n
    // axis when the summand does not itself depend on n.
    std::ptrdiff_t nAxis = -1;
    for (std::size_t i = 0; i < axes.size(); ++i)
        if (axes[i].name == "n") nAxis = static_cast<std::ptrdiff_t>(i);
    bool sumToN = nAxis >= 0 && lhs->kind == ExprKind::Sum &&
                  lhs->args[0]->kind == ExprKind::Literal &&
                  lhs->args[0]->value == Rat(0) &&
                  lhs->args[1]->kind == ExprKind::Symbol &&
                  lhs->args[1]->name == "n" && axes[nAxis].lo >= 0 &&
                  !rec.vars.count(lhs->name);
    bool incremental = sumToN && !free_symbols(*lhs->args[2]).count("n");

    // Second fast path: a summand of the form binom(n, k) * rest(k) with
    // rest free of n.  rest(k) is evaluated once per grid combination and the
    // binomial row is advanced by Pascal's rule, so the sum is still built
    // term by term but each term's sequence products are computed only once.
    std::vector<ExprPtr> restFactors;
    bool binomialRow = false;
    if (sumToN && !incremental) {
        std::vector<ExprPtr> factors;
        std::vector<ExprPtr> stack{lhs->args[2]};
        while (!stack.empty()) {
            ExprPtr e = stack.back();
            stack.pop_back();
            if (e->kind == ExprKind::Mul) {
                stack.push_back(e->args[0]);
                stack.push_back(e->args[1]);
            } else {
                factors.push_back(e);
            }
        }
        std::size_t binomCount = 0;
        bool restOk = true;
        for (const ExprPtr& f : factors) {
            if (f->kind == ExprKind::Binom && f->args[0]->kind == ExprKind::Symbol &&
                f->args[0]->name == "n" && f->args[1]->kind == ExprKind::Symbol &&
                f->args[1]->name == lhs->name) {
                ++binomCount;
            } else if (free_symbols(*f).count("n")) {
                restOk = false;
            } else {
                restFactors.push_back(f);
            }
        }
        binomialRow = binomCount == 1 && restOk;
    }

    std::optional<std::vector<long long>> bestKey;
    std::vector<std::size_t> seedIndex(unpinned.size(), 0);

    for (std::size_t combo = 0; combo < combos; ++combo) {
        EvalContext ctx;
        {
            std::size_t t = combo;
            for (std::size_t i = 0; i < unpinned.size(); ++i) {
                seedIndex[i] = t % seedSet.size();
                ctx.seeds[unpinned[i]] = seedSet[seedIndex[i]];
                t /= seedSet.size();
            }
        }
        for (const auto& [letter, seed] : rec.seeds) ctx.seeds[letter] = seed;
        Evaluator ev(ctx);
        PointChecker checker{axes, unpinned, seedIndex, rep, bestKey};

        // check(values) assumes every axis value is already bound in the
        // evaluator context; lhsValue is the LHS value when precomputed
        // incrementally, nullopt to evaluate the full expression here.
        auto check = [&](const std::vector<long long>& values,
                         const std::optional<Rat>& lhsValue) {
            try {
                if (ev.eval(cons) == Rat(0)) {
                    ++rep.skipped;
                    return;
                }
                Rat left = lhsValue ? *lhsValue : ev.eval(lhs);
                Rat right = ev.eval(rhs);
                ++rep.checked;
                if (left != right)
                    checker.fail(values,
                                 "lhs = " + rat_str(left) + ", rhs = " + rat_str(right),
                                 ev.context());
            } catch (const Error& e) {
                ++rep.checked;
                checker.fail(values, std::string("evaluation error: ") + e.what(),
                             ev.context());
            }
        };

        if (axes.empty()) {
            check({}, std::nullopt);
            continue;
        }

        // Iterate the non-n axes with an odometer; run n innermost so the
        // incremental path can reuse partial sums.
        std::vector<std::size_t> outer;
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (static_cast<std::ptrdiff_t>(i) != nAxis || !(incremental || binomialRow))
                outer.push_back(i);

        std::vector<long long> values(axes.size(), 0);
        std::vector<long long> cursor(outer.size(), 0);
        bool done = false;
        while (!done) {
            for (std::size_t i = 0; i < outer.size(); ++i) {
                values[outer[i]] = axes[outer[i]].lo + cursor[i];
                ev.context().ints[axes[outer[i]].name] = BigInt(values[outer[i]]);
            }
            if (incremental) {
                Rat acc(0);
                long long k = 0;
                for (long long n = axes[nAxis].lo; n <= axes[nAxis].hi; ++n) {
                    for (; k <= n; ++k) {
                        ev.context().ints[lhs->name] = BigInt(k);
                        acc += ev.eval(lhs->args[2]);
                    }
                    ev.context().ints.erase(lhs->name);
                    values[nAxis] = n;
                    ev.context().ints["n"] = BigInt(n);
                    check(values, acc);
                }
            } else if (binomialRow) {
                std::vector<Rat> rest;
                bool restFailed = false;
                try {
                    for (long long k = 0; k <= axes[nAxis].hi; ++k) {
                        ev.context().ints[lhs->name] = BigInt(k);
                        Rat prod(1);
                        for (const ExprPtr& f : restFactors) prod *= ev.eval(f);
                        rest.push_back(prod);
                    }
                } catch (const Error&) {
                    // A summand that cannot be evaluated must be reported per
                    // point, so fall back to the generic path for this combo.
                    restFailed = true;
                }
                ev.context().ints.erase(lhs->name);
                std::vector<BigInt> row;
                for (long long n = 0; n <= axes[nAxis].hi; ++n) {
                    row.push_back(1);
                    for (std::size_t i = row.size() - 1; i-- > 1;) row[i] += row[i - 1];
                    values[nAxis] = n;
                    if (n < axes[nAxis].lo) continue;
                    ev.context().ints["n"] = BigInt(n);
                    if (restFailed) {
                        check(values, std::nullopt);
                        continue;
                    }
                    Rat total(0);
                    for (std::size_t k = 0; k < row.size(); ++k)
                        total += Rat(row[k]) * rest[k];
                    check(values, total);
                }
            } else {
                check(values, std::nullopt);
            }
            done = true;
            for (std::size_t i = outer.size(); i-- > 0;) {
                if (axes[outer[i]].lo + ++cursor[i] <= axes[outer[i]].hi) {
                    done = false;
                    break;
                }
                cursor[i] = 0;
            }
            if (outer.empty()) done = true;
        }
    }
    return rep;
}

}  // namespace

VerifyReport catalog_verify(const std::vector<IdentityRecord>& catalog, int gridScale) {
    std::vector<const IdentityRecord*> order;
    order.reserve(catalog.size());
    for (const IdentityRecord& rec : catalog) order.push_back(&rec);
    std::sort(order.begin(), order.end(),
              [](const IdentityRecord* a, const IdentityRecord* b) { return a->id < b->id; });

    VerifyReport report;
    report.records.resize(order.size());
    parallel_for(order.size(), [&](std::size_t i) {
        report.records[i] = verify_record(*order[i], gridScale);
    });
    return report;
}

const IdentityRecord& find_record(const std::vector<IdentityRecord>& catalog,
                                  const std::string& id) {
    for (const IdentityRecord& rec : catalog)
        if (rec.id == id) return rec;
    throw UnknownRecord(id);
}

Rat binom_sum_closed(const IdentityRecord& record, const EvalContext& params) {
    if (record.id.rfind("13.", 0) != 0 && record.id.rfind("14.", 0) != 0)
        throw UnknownRecord(record.id + " (not a binomial-coefficient record)");
    EvalContext ctx = params;
    for (const auto& [letter, seed] : record.seeds) ctx.seeds[letter] = seed;
    return eval(parse(record.rhs), ctx);
}

}  // namespace fibsum
