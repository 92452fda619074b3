// Acceptance gate: one criterion per invocation, one pass/fail line each.
#include "cg3/cli.hpp"

#include <sstream>

using namespace cg3;

static int report(int n, const char* what, const SuiteResult& r) {
    std::cout << "criterion " << n << " (" << what << "): "
              << (r.pass ? "PASS" : "FAIL") << " [" << r.checks
              << " checks]\n";
    for (auto& f : r.failures) std::cout << "  " << f << "\n";
    return r.pass ? 0 : 1;
}

static int criterion7() {
    bool ok = true;
    std::vector<std::string> notes;

    {  // decompose example: 2 labels, weights [2,0,0] and [1,1,0]
        std::ostringstream out, err;
        int rc = run_command({"decompose", "--w1", "1,0", "--w2", "1,0"}, out,
                             err);
        auto j = json::parse(out.str(), nullptr, false);
        bool good = rc == 0 && !j.is_discarded() && j["labels"].size() == 2;
        if (good) {
            std::set<json> ws;
            for (auto& row : j["labels"]) ws.insert(row["weight"]);
            good = ws == std::set<json>{json::array({2, 0, 0}),
                                        json::array({1, 1, 0})};
        }
        if (!good) notes.push_back("decompose example failed");
        ok = ok && good;
    }
    {  // cg example: two terms, verified, exit 0
        std::ostringstream out, err;
        int rc = run_command({"cg", "--w1", "1,0", "--w2", "1,0", "--label",
                              "1,1,0,0,0", "--descent", "0,0,0", "--mode",
                              "both"},
                             out, err);
        auto j = json::parse(out.str(), nullptr, false);
        bool good = rc == 0 && !j.is_discarded() && j["terms"].size() == 2 &&
                    j["verified"] == true;
        if (!good) notes.push_back("cg example failed");
        ok = ok && good;
    }
    {  // verify example: exit 0 at max-weight 2
        std::ostringstream out, err;
        int rc = run_command({"verify", "--max-weight", "2"}, out, err);
        if (rc != 0) notes.push_back("verify --max-weight 2 exited nonzero");
        ok = ok && rc == 0;
    }
    {  // JSON round trip: parse and re-serialize byte-identically
        std::ostringstream out, err;
        int rc = run_command({"table", "--w1", "2,1", "--w2", "1,0"}, out, err);
        std::string body = out.str();
        std::string again =
            json::parse(body).dump(2) + "\n";
        bool good = rc == 0 && again == body;
        if (!good) notes.push_back("table round trip not byte-stable");
        ok = ok && good;
    }
    {  // malformed input exits 2
        std::ostringstream out, err;
        bool good =
            run_command({"cg", "--w1", "banana", "--w2", "1,0", "--label",
                         "1,0,0,0,0", "--descent", "0,0,0"},
                        out, err) == 2 &&
            run_command({"decompose", "--w1", "0,1", "--w2", "1,0"}, out,
                        err) == 2;
        if (!good) notes.push_back("malformed input did not exit 2");
        ok = ok && good;
    }

    std::cout << "criterion 7 (cli contract): " << (ok ? "PASS" : "FAIL")
              << "\n";
    for (auto& n : notes) std::cout << "  " << n << "\n";
    return ok ? 0 : 1;
}

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1-7>\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    switch (n) {
        case 1:
            return report(1, "gamma series", suite_gamma(4));
        case 2:
            return report(2, "model", suite_model(4));
        case 3:
            return report(3, "highest vectors", suite_highest(4));
        case 4:
            return report(4, "relations", suite_relations(3));
        case 5: {
            SuiteResult a = suite_cg(3);
            SuiteResult b = suite_literal(2);
            int rc = report(5, "cg equivalence", a);
            for (auto& f : b.failures) std::cout << "  " << f << "\n";
            return rc | (b.pass ? 0 : 1);
        }
        case 6:
            return report(6, "sign rule", suite_signs(3));
        case 7:
            return criterion7();
        default:
            std::cerr << "usage: acceptance <criterion 1-7>\n";
            return 2;
    }
}
