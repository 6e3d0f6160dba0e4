#include <doctest.h>

#include <jetprolong/closed_form.hpp>
#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/inductive.hpp>
#include <jetprolong/verify.hpp>

#include "notation.hpp"

#include <set>
#include <stdexcept>

using namespace jetprolong;

namespace
{

const std::vector<fixture::Section> &file(const std::string &name)
{
    static std::map<std::string, std::vector<fixture::Section>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, fixture::read_sections(JETPROLONG_FIXTURES "/" + name)).first;
    }
    return it->second;
}

std::set<TermDifference> known(const std::string &entry)
{
    std::set<TermDifference> out;
    for (const auto &c : table_corrections()) {
        if (c.entry == entry) {
            out.insert({c.monomial, c.reference, c.computed});
        }
    }
    return out;
}

template <class P>
std::set<TermDifference> diff_set(const P &a, const P &b)
{
    const auto d = differences(a, b);
    return {d.begin(), d.end()};
}

std::vector<std::vector<int>> tuples(int n, int len)
{
    std::vector<std::vector<int>> out{{}};
    for (int s = 0; s < len; ++s) {
        std::vector<std::vector<int>> next;
        for (const auto &t : out) {
            for (int i = 1; i <= n; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(u);
            }
        }
        out = next;
    }
    return out;
}

struct IndexTable {
    const char *file;
    const char *section;
    int kappa;
    bool order_lower; // single x, subscripts are orders
    int max_n;
    int max_m;
};

} // namespace

TEST_CASE("scalar tables differ from the engines only at the recorded misprints")
{
    const auto table = prolong_inductive(Dims(1, 1), 6);
    for (int kappa = 1; kappa <= 6; ++kappa) {
        const std::string name = "Y" + std::to_string(kappa);
        CAPTURE(name);
        const std::vector<int> ones(static_cast<std::size_t>(kappa), 1);
        const auto closed = prolongation_closed({Dims(1, 1), 1, ones});
        REQUIRE(closed == table.entry(1, ones));
        const auto printed = fixture::scalar(fixture::section(file("scalar.txt"), name), kappa);
        CHECK(printed.size() == closed.size());
        CHECK(diff_set(printed, closed) == known(name));
    }
}

TEST_CASE("composite-derivative scalar tables")
{
    for (int kappa = 1; kappa <= 6; ++kappa) {
        const std::string name = "h" + std::to_string(kappa);
        CAPTURE(name);
        const std::vector<int> ones(static_cast<std::size_t>(kappa), 1);
        const auto closed = faa_closed(Dims(1, 1), ones);
        REQUIRE(closed == faa_inductive(Dims(1, 1), ones));
        const auto printed = fixture::scalar_faa(fixture::section(file("scalar.txt"), name));
        CHECK(diff_set(printed, closed) == known(name));
    }
}

TEST_CASE("index-form prolongation tables")
{
    const std::vector<IndexTable> all = {
        {"kronecker.txt", "n-first", 1, false, 3, 1},  {"kronecker.txt", "n-second", 2, false, 3, 1},
        {"kronecker.txt", "n-third", 3, false, 3, 1},  {"kronecker.txt", "m-first", 1, true, 1, 3},
        {"kronecker.txt", "m-second", 2, true, 1, 3},  {"kronecker.txt", "m-third", 3, true, 1, 3},
        {"kronecker.txt", "m-fourth", 4, true, 1, 3},  {"kronecker.txt", "nm-first", 1, false, 3, 3},
        {"kronecker.txt", "nm-second", 2, false, 3, 2}, {"kronecker.txt", "nm-third", 3, false, 2, 2},
    };
    for (const auto &t : all) {
        const auto body = fixture::section(file(t.file), t.section);
        for (int n = 1; n <= t.max_n; ++n) {
            for (int m = 1; m <= t.max_m; ++m) {
                for (int j = 1; j <= m; ++j) {
                    for (const auto &idx : tuples(n, t.kappa)) {
                        CAPTURE(t.section);
                        CAPTURE(n);
                        CAPTURE(m);
                        CAPTURE(j);
                        const fixture::Binding b{Dims(n, m), j, idx, t.order_lower, false};
                        const auto printed = fixture::parse_prolongation(body, b);
                        CHECK(first_difference(printed, prolongation_closed({Dims(n, m), j, idx})) == std::nullopt);
                    }
                }
            }
        }
    }
}

TEST_CASE("corrected index-form lines are wrong as printed")
{
    std::set<std::string> ledgered;
    for (const auto &c : table_corrections()) {
        if (c.entry.find('-') != std::string::npos && c.entry.rfind("Y_", 0) != 0) {
            ledgered.insert(c.entry);
        }
    }
    std::set<std::string> corrected;
    for (const auto &sec : file("kronecker.txt")) {
        if (sec.corrections == 0) {
            CHECK(sec.printed == sec.body);
            continue;
        }
        CAPTURE(sec.name);
        CHECK(sec.corrections == 1);
        corrected.insert(sec.name);
        const bool lower = sec.name.rfind("m-", 0) == 0;
        const int kappa = sec.name.find("first") != std::string::npos    ? 1
                          : sec.name.find("second") != std::string::npos ? 2
                          : sec.name.find("third") != std::string::npos  ? 3
                                                                         : 4;
        bool differs = false;
        for (int n = 1; n <= (lower ? 1 : 2) && !differs; ++n) {
            for (int m = 1; m <= 3 && !differs; ++m) {
                for (const auto &idx : tuples(n, kappa)) {
                    const fixture::Binding b{Dims(n, m), 1, idx, lower, false};
                    if (fixture::parse_prolongation(sec.printed, b) != prolongation_closed({Dims(n, m), 1, idx})) {
                        differs = true;
                        break;
                    }
                }
            }
        }
        CHECK(differs);
    }
    CHECK(corrected == std::set<std::string>{"m-fourth", "m-third", "nm-second", "nm-third"});
    CHECK(corrected == ledgered);
}

TEST_CASE("index-form composite-derivative tables")
{
    struct Faa {
        const char *section;
        int kappa;
        bool order_lower;
        bool count_f;
        int max_n;
        int max_m;
    };
    const std::vector<Faa> all = {
        {"n-1", 1, false, true, 3, 1},  {"n-2", 2, false, true, 3, 1},  {"n-3", 3, false, true, 3, 1},
        {"n-4", 4, false, true, 3, 1},  {"m-1", 1, true, false, 1, 3},  {"m-2", 2, true, false, 1, 3},
        {"m-3", 3, true, false, 1, 3},  {"m-4", 4, true, false, 1, 3},  {"m-5", 5, true, false, 1, 3},
        {"nm-1", 1, false, false, 3, 3}, {"nm-2", 2, false, false, 3, 3}, {"nm-3", 3, false, false, 3, 2},
        {"nm-4", 4, false, false, 2, 2},
    };
    for (const auto &t : all) {
        const auto body = fixture::section(file("faa.txt"), t.section);
        for (int n = 1; n <= t.max_n; ++n) {
            for (int m = 1; m <= t.max_m; ++m) {
                for (const auto &idx : tuples(n, t.kappa)) {
                    CAPTURE(t.section);
                    CAPTURE(n);
                    CAPTURE(m);
                    const fixture::Binding b{Dims(n, m), 1, idx, t.order_lower, t.count_f};
                    CHECK(first_difference(fixture::parse_faa(body, b), faa_closed(Dims(n, m), idx)) == std::nullopt);
                }
            }
        }
    }
}

TEST_CASE("every recorded scalar misprint is confirmed by both engines")
{
    for (const auto &c : table_corrections()) {
        if (c.entry.size() != 2 || (c.entry[0] != 'Y' && c.entry[0] != 'h')) {
            continue;
        }
        CAPTURE(c.entry);
        CAPTURE(c.monomial);
        CHECK(c.reference != c.computed);
        CHECK(known(c.entry).count({c.monomial, c.reference, c.computed}) == 1);
    }
    CHECK(known("Y5").size() == 1);
    CHECK(known("Y6").size() == 2);
}

TEST_CASE("fixture reader rejects malformed input")
{
    CHECK_THROWS_AS(fixture::scalar("[Y_y - X_x y_1", 1), std::runtime_error);
    CHECK_THROWS_AS(fixture::scalar("Q_x", 1), std::runtime_error);
    CHECK_THROWS_AS(fixture::scalar("Y_x y_{k1}", 1), std::runtime_error);
    CHECK_THROWS_AS(fixture::section(file("scalar.txt"), "Y9"), std::runtime_error);
    CHECK_THROWS_AS(fixture::read_sections("/nonexistent/fixture.txt"), std::runtime_error);
}
