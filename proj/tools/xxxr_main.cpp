#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "xxxr/enumerate.hpp"
#include "xxxr/forbidden.hpp"
#include "xxxr/pairs.hpp"
#include "xxxr/structure.hpp"
#include "xxxr/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::string witness_text(const std::optional<xxxr::XxxrWitness>& w, const xxxr::Bits& image) {
    if (!w) return "NONE";
    std::ostringstream os;
    os << "start=" << w->start << " len=" << w->len;
    if (w->len <= 48) os << " x=" << image.substr(w->start, w->len);
    return os.str();
}

int run_check(const std::string& word) {
    if (!xxxr::is_binary_word(word) || word.empty()) {
        std::cerr << "check: word must be a non-empty string over 0 and 1\n";
        return kExitUsage;
    }
    std::cout << "word: " << word << "\n";
    std::cout << "length: " << word.size() << "\n";
    auto w = xxxr::find_xxxr(word);
    std::cout << "avoids: " << (w ? "no" : "yes") << "\n";
    if (w) std::cout << "witness: " << witness_text(w, word) << "\n";
    std::cout << "in_k: " << (xxxr::is_in_K(word) ? "yes" : "no") << "\n";
    return kExitOk;
}

int run_count(int max_n, const std::string& set) {
    std::vector<std::uint64_t> counts;
    if (set == "N") {
        counts = xxxr::count_avoiders_up_to(max_n);
    } else if (set == "K") {
        counts = xxxr::count_k_words_up_to(max_n);
    } else {
        counts = xxxr::count_m_words_up_to(max_n);
    }
    for (int n = 1; n <= max_n; ++n) std::cout << n << " " << counts[n] << "\n";
    return kExitOk;
}

int run_list(int n, const std::string& set) {
    if (set == "N") {
        for (const auto& w : xxxr::enumerate_avoiders(n)) std::cout << w << "\n";
    } else if (set == "K") {
        for (const auto& w : xxxr::enumerate_k_words(n)) std::cout << w << "\n";
    } else {
        for (const auto& u : xxxr::enumerate_m_words(n)) std::cout << u << "\n";
    }
    return kExitOk;
}

int run_decompose(const std::string& word) {
    if (!xxxr::is_binary_word(word)) {
        std::cerr << "decompose: word must be a string over 0 and 1\n";
        return kExitUsage;
    }
    std::cout << "word: " << word << "\n";
    xxxr::StructureResult res = xxxr::structure_decompose(word);
    if (res.status == xxxr::DecomposeStatus::not_in_k) {
        std::cout << "status: NOT_IN_K\n";
        return kExitUsage;
    }
    if (res.status == xxxr::DecomposeStatus::no_decomposition) {
        std::cout << "status: NO_DECOMPOSITION\n";
        std::cerr << "decompose: " << word
                  << " admits no bounded split; this contradicts the structure claim\n";
        return kExitFalsified;
    }
    const xxxr::StructureDecomposition& d = res.parts;
    std::cout << "status: OK\n";
    std::cout << "p: " << d.p << "\n";
    std::cout << "u: " << d.u << "\n";
    std::cout << "s: " << d.s << "\n";
    std::cout << "t: " << d.t << "\n";
    if (xxxr::recompose(d) != word) {
        std::cerr << "decompose: recomposition mismatch\n";
        return kExitFalsified;
    }

    xxxr::TowerParse tower = xxxr::tower_parse(d.u);
    std::cout << "tower.status: " << (tower.complete ? "complete" : "failed") << "\n";
    std::cout << "tower.levels: " << tower.levels.size() << "\n";
    for (std::size_t i = 0; i < tower.levels.size(); ++i) {
        const xxxr::TowerLevel& lv = tower.levels[i];
        std::string key = "tower.level" + std::to_string(i + 1);
        std::cout << key << ".prefix: " << lv.prefix << "\n";
        std::cout << key << ".sigma1: " << lv.sigma1 << "\n";
        std::cout << key << ".j: " << lv.j << "\n";
        std::cout << key << ".sigma2: " << lv.sigma2 << "\n";
        std::cout << key << ".k: " << lv.k << "\n";
        std::cout << key << ".sigma3: " << lv.sigma3 << "\n";
    }
    if (!tower.complete) {
        std::cout << "tower.failed_level: " << tower.failed_level << "\n";
        std::cout << "tower.failed_stage: " << tower.failed_stage << "\n";
        std::cout << "tower.core: " << tower.core << "\n";
        std::cerr << "decompose: layer parse stopped early\n";
        return kExitFalsified;
    }
    if (xxxr::recompose(tower) != d.u) {
        std::cerr << "decompose: tower recomposition mismatch\n";
        return kExitFalsified;
    }
    std::cout << "tower.invariants: "
              << (xxxr::tower_invariants_hold(d.u, tower) ? "hold" : "violated") << "\n";
    return xxxr::tower_invariants_hold(d.u, tower) ? kExitOk : kExitFalsified;
}

void print_conditions(const std::vector<xxxr::ConditionCheck>& checks, bool& all_ok) {
    for (const auto& c : checks) {
        std::cout << (c.pass ? "pass" : "FAIL") << ": " << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << " [" << c.detail << "]";
        std::cout << "\n";
        all_ok = all_ok && c.pass;
    }
}

int run_verify_suitable(int level, int max_beta) {
    xxxr::SuitablePair pair = xxxr::pair_at_level(level);
    std::cout << "level: " << level << "\n";
    std::cout << "s_letter_length: " << pair.s_word.size() << "\n";
    std::cout << "l_letter_length: " << pair.l_word.size() << "\n";
    std::cout << "h_s_length: " << xxxr::pair_h(pair, "S").size() << "\n";
    std::cout << "h_l_length: " << xxxr::pair_h(pair, "L").size() << "\n";
    bool ok = true;
    print_conditions(xxxr::verify_suitable(pair), ok);
    bool parity = xxxr::parity_check(pair);
    std::cout << (parity ? "pass" : "FAIL") << ": image lengths odd/even\n";
    ok = ok && parity;
    print_conditions(xxxr::check_witness_overlaps(pair), ok);
    print_conditions(xxxr::check_phi_overlaps(pair, max_beta), ok);
    std::cout << "successor_s_pattern: LSLSLLSLLSLSL\n";
    std::cout << "successor_l_pattern: LSLSLLSLLSLSLLSLLSLSL\n";
    std::cout << "note: the S successor is built from phi^3 of the S letter; reusing phi^3 of\n";
    std::cout << "note: the L letter for both successors would duplicate the L successor, whose\n";
    std::cout << "note: image length is even, losing the odd/even image split the pair needs.\n";
    std::cout << (ok ? "result: pass" : "result: FAIL") << "\n";
    return ok ? kExitOk : kExitFalsified;
}

int run_verify_forbidden(int level, int max_len) {
    xxxr::SuitablePair pair = xxxr::pair_at_level(level);
    std::cout << "level: " << level << "\n";
    bool ok = true;
    auto diags = xxxr::check_forbidden_images(pair);
    std::cout << "members: " << diags.size() << "\n";
    for (const auto& d : diags) {
        xxxr::Bits even = xxxr::h_map(d.member.flattened, xxxr::Parity::even);
        xxxr::Bits odd = xxxr::h_map(d.member.flattened, xxxr::Parity::odd);
        bool hit = d.even_witness.has_value() && d.odd_witness.has_value();
        ok = ok && hit;
        std::cout << (hit ? "pass" : "FAIL") << ": term=" << d.member.term
                  << " pattern=" << d.member.pattern << " even=["
                  << witness_text(d.even_witness, even) << "] odd=["
                  << witness_text(d.odd_witness, odd) << "]\n";
    }
    for (const auto& f : xxxr::check_family_witnesses(pair)) {
        ok = ok && f.pass;
        std::cout << (f.pass ? "pass" : "FAIL") << ": family=" << f.term
                  << " representative=" << f.representative << " |x|=" << f.x.size()
                  << " contains=" << (f.contains_witness ? "yes" : "no");
        if (!f.expected.empty()) {
            std::cout << " exact=" << (f.matches_expected ? "yes" : "no");
        }
        std::cout << "\n";
    }
    bool excluded = xxxr::sl_avoiders_exclude_forbidden(pair, max_len);
    std::cout << (excluded ? "pass" : "FAIL") << ": avoiding patterns up to length " << max_len
              << " contain no member\n";
    ok = ok && excluded;
    std::cout << (ok ? "result: pass" : "result: FAIL") << "\n";
    return ok ? kExitOk : kExitFalsified;
}

int run_lower_bound(int max_len) {
    auto words = xxxr::generate_lower_language(max_len);
    std::cout << "words: " << words.size() << "\n";
    bool ok = true;

    auto factors = xxxr::lower_language_forbidden_factors();
    std::size_t factor_violations = 0;
    for (const auto& w : words) {
        for (const auto& f : factors) {
            if (w.word.find(f) != std::string::npos) {
                ++factor_violations;
                std::cout << "FAIL: word " << w.word << " contains factor " << f << "\n";
            }
        }
    }
    std::cout << (factor_violations == 0 ? "pass" : "FAIL") << ": excluded factors absent\n";
    ok = ok && factor_violations == 0;

    bool even_avoid = xxxr::lower_language_images_avoid(max_len);
    std::cout << (even_avoid ? "pass" : "FAIL") << ": images avoid at even start\n";
    ok = ok && even_avoid;
    std::cout << "diagnostic: images at odd start "
              << (xxxr::lower_language_images_avoid_odd(max_len) ? "avoid" : "do not avoid")
              << "\n";

    std::vector<std::uint64_t> generated(max_len + 1, 0);
    for (const auto& w : words) ++generated[w.word.size()];
    bool counts_agree = true;
    for (int n = 1; n <= max_len; ++n) {
        std::uint64_t formula = xxxr::count_lower_language(n);
        std::cout << "n=" << n << " generated=" << generated[n] << " counted=" << formula << "\n";
        counts_agree = counts_agree && generated[n] == formula;
    }
    std::cout << (counts_agree ? "pass" : "FAIL") << ": generation matches counting\n";
    ok = ok && counts_agree;
    std::cout << (ok ? "result: pass" : "result: FAIL") << "\n";
    return ok ? kExitOk : kExitFalsified;
}

int run_bounds_report(int max_n, const std::string& format, const std::string& output) {
    auto rows = xxxr::growth_report(max_n);
    std::ostringstream body;
    if (format == "csv") {
        xxxr::write_growth_csv(body, rows);
    } else {
        body << "n\ta_n\tlower\tp2\tfib\tlg_ratio\n";
        for (const auto& r : rows) {
            std::ostringstream ratio;
            ratio.setf(std::ios::fixed);
            ratio.precision(6);
            ratio << r.lg_ratio;
            body << r.n << '\t' << r.a_n << '\t' << r.lower_count << '\t' << r.p2_partitions
                 << '\t' << r.fib_partitions << '\t' << ratio.str() << '\n';
        }
    }
    if (output.empty()) {
        std::cout << body.str();
        return kExitOk;
    }
    std::ofstream out(output);
    if (!out) {
        std::cerr << "bounds-report: cannot open " << output << "\n";
        return kExitUsage;
    }
    out << body.str();
    return kExitOk;
}

int run_oeis_check(const std::string& path, int max_n) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "oeis-check: cannot open " << path << "\n";
        return kExitUsage;
    }
    xxxr::CrosscheckResult res = xxxr::oeis_crosscheck(in, max_n);
    if (res.parse_error) {
        std::cerr << "oeis-check: " << res.message << "\n";
        return kExitUsage;
    }
    if (!res.message.empty()) std::cout << "warning: " << res.message << "\n";
    std::cout << "rows: " << res.rows << "\n";
    for (const auto& m : res.mismatches) {
        std::cout << "mismatch: n=" << m.n << " computed=" << m.computed
                  << " file=" << m.file_value << "\n";
    }
    std::cout << "mismatches: " << res.mismatches.size() << "\n";
    return res.mismatches.empty() ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for binary words avoiding x x reverse(x)"};
    app.require_subcommand(1);

    std::string word;
    auto* check = app.add_subcommand("check", "test one binary word for avoidance");
    check->add_option("word", word, "binary word")->required();

    int count_max_n = 20;
    int cap = 64;
    std::string count_set = "N";
    auto* count = app.add_subcommand("count", "count words by length");
    count->add_option("--max-n", count_max_n, "largest length")->required();
    count->add_option("--cap", cap, "guard on --max-n (default 64)");
    count->add_option("--set", count_set, "N (all avoiders), K (0...1 avoiders), M (SL preimages)")
        ->check(CLI::IsMember({"N", "K", "M"}));

    int list_n = 5;
    std::string list_set = "N";
    auto* list = app.add_subcommand("list", "list words of one length");
    list->add_option("--n", list_n, "length")->required();
    list->add_option("--set", list_set, "N, K or M")->check(CLI::IsMember({"N", "K", "M"}));

    std::string dword;
    auto* decompose = app.add_subcommand("decompose", "split a word into edge parts and image");
    decompose->add_option("word", dword, "binary word")->required();

    int vs_level = 0;
    int vs_beta = 4;
    auto* vsuit = app.add_subcommand("verify-suitable", "check the letter pair at one level");
    vsuit->add_option("--level", vs_level, "lift level (0..4)")->check(CLI::Range(0, 4));
    vsuit->add_option("--max-beta", vs_beta, "context length for image interlocks")
        ->check(CLI::Range(0, 6));

    int vf_level = 0;
    int vf_max_len = 7;
    auto* vforb = app.add_subcommand("verify-forbidden", "check the excluded family at one level");
    vforb->add_option("--level", vf_level, "lift level (0..4)")->check(CLI::Range(0, 4));
    vforb->add_option("--max-len", vf_max_len, "pattern length bound for the exclusion search")
        ->check(CLI::Range(0, 12));

    int lb_max_len = 20;
    auto* lower = app.add_subcommand("lower-bound", "generate and check the nested language");
    lower->add_option("--max-len", lb_max_len, "largest word length")->check(CLI::Range(0, 64));

    int br_max_n = 32;
    std::string br_format = "text";
    std::string br_output;
    auto* bounds = app.add_subcommand("bounds-report", "tabulate counts and growth columns");
    bounds->add_option("--max-n", br_max_n, "largest length (<= 64)")->check(CLI::Range(1, 64));
    bounds->add_option("--format", br_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    bounds->add_option("--output", br_output, "write to a file instead of stdout");

    std::string bfile;
    int oc_max_n = 64;
    auto* oeis = app.add_subcommand("oeis-check", "compare counts against a b-file");
    oeis->add_option("file", bfile, "b-file with rows 'n value'")->required();
    oeis->add_option("--max-n", oc_max_n, "largest n to compare")->check(CLI::Range(1, 64));

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(word);
        if (count->parsed()) {
            if (count_max_n < 1 || count_max_n > cap) {
                std::cerr << "count: --max-n must be in [1, " << cap << "]\n";
                return kExitUsage;
            }
            return run_count(count_max_n, count_set);
        }
        if (list->parsed()) {
            if (list_n < 0 || list_n > cap) {
                std::cerr << "list: --n must be in [0, " << cap << "]\n";
                return kExitUsage;
            }
            return run_list(list_n, list_set);
        }
        if (decompose->parsed()) return run_decompose(dword);
        if (vsuit->parsed()) return run_verify_suitable(vs_level, vs_beta);
        if (vforb->parsed()) return run_verify_forbidden(vf_level, vf_max_len);
        if (lower->parsed()) return run_lower_bound(lb_max_len);
        if (bounds->parsed()) return run_bounds_report(br_max_n, br_format, br_output);
        if (oeis->parsed()) return run_oeis_check(bfile, oc_max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
