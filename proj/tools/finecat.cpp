#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "finecat/closedforms.hpp"
#include "finecat/core.hpp"
#include "finecat/identities.hpp"
#include "finecat/ints.hpp"
#include "finecat/oracle.hpp"
#include "finecat/render.hpp"

namespace {

namespace cf = finecat::closedforms;
namespace core = finecat::core;
namespace oracle = finecat::oracle;
namespace identities = finecat::identities;
namespace render = finecat::render;

finecat::Triangle closed_triangle(int m, int rows) {
  finecat::Triangle t(rows);
  for (int n = 1; n <= rows; ++n) {
    for (int k = 1; k <= n; ++k) {
      switch (m) {
        case 1: t.at(n, k) = cf::g1_explicit(n, k); break;
        case 2: t.at(n, k) = cf::g2_closed(n, k); break;
        case 3: t.at(n, k) = cf::g3_closed(n, k); break;
        default: t.at(n, k) = cf::g4_explicit(n, k); break;
      }
    }
  }
  return t;
}

finecat::Triangle triangle_by_method(int m, int rows,
                                     const std::string& method) {
  if (method == "conv") {
    return core::convolution_triangle(core::tower_sequence(m - 1, rows), rows);
  }
  if (method == "matrix") {
    finecat::Triangle g1 =
        core::convolution_triangle(core::fine_sequence(rows), rows);
    return core::triangle_times_pascal_power(g1, m - 1);
  }
  if (method == "closed") return closed_triangle(m, rows);
  throw std::invalid_argument("unknown method: " + method);
}

// Hills print as UD plus their color digit, everything else verbatim, tokens
// separated by single spaces; the empty path prints as "(empty)".
std::string colored_to_text(const oracle::ColoredDyckPath& p) {
  const std::string& s = p.path.steps;
  if (s.empty()) return "(empty)";
  std::vector<int> hills = oracle::hill_positions(p.path);
  std::vector<std::string> tokens;
  size_t hi = 0;
  size_t i = 0;
  while (i < s.size()) {
    if (hi < hills.size() && i == static_cast<size_t>(hills[hi])) {
      tokens.push_back("UD" + std::to_string(p.colors[hi]));
      i += 2;
      ++hi;
    } else {
      std::string run;
      while (i < s.size() &&
             !(hi < hills.size() && i == static_cast<size_t>(hills[hi]))) {
        run.push_back(s[i]);
        ++i;
      }
      tokens.push_back(std::move(run));
    }
  }
  std::string out;
  for (size_t t = 0; t < tokens.size(); ++t) {
    if (t > 0) out.push_back(' ');
    out += tokens[t];
  }
  return out;
}

std::string ballot_text(const oracle::BallotWord& w) {
  return w.bits.empty() ? "(empty)" : w.bits;
}

// All two-colorings of all Dyck paths of semilength s with exactly the given
// number of color-2 hills; paths in lexicographic order, colorings with
// color 1 preferred at each hill.
void for_each_two_colored(
    int s, int twos,
    const std::function<void(const oracle::ColoredDyckPath&)>& visit) {
  oracle::for_each_dyck(s, [&](const oracle::DyckPath& p) {
    std::vector<int> hills = oracle::hill_positions(p);
    int h = static_cast<int>(hills.size());
    if (twos > h) return;
    std::vector<int> colors(h, 1);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
      if (remaining == 0) {
        visit(oracle::ColoredDyckPath{p, colors});
        return;
      }
      if (h - idx < remaining) return;
      self(self, idx + 1, remaining);
      colors[idx] = 2;
      self(self, idx + 1, remaining - 1);
      colors[idx] = 1;
    };
    rec(rec, 0, twos);
  });
}

constexpr int kBijectionMaxN = 8;

int cmd_bijection_list(int n, int k) {
  if (n > kBijectionMaxN) {
    throw finecat::resource_limit_error("bijection modes are exhaustive; n is capped at 8");
  }
  if (k < 1 || k > n) throw std::invalid_argument("bijection list: k must lie in 1..n");
  for_each_two_colored(n - 1, n - k, [](const oracle::ColoredDyckPath& p) {
    std::cout << colored_to_text(p) << " <-> "
              << ballot_text(oracle::dyck_to_ballot(p)) << "\n";
  });
  return 0;
}

int cmd_bijection_roundtrip(int n) {
  if (n > kBijectionMaxN) {
    throw finecat::resource_limit_error("bijection modes are exhaustive; n is capped at 8");
  }
  long pairs = 0;
  std::vector<std::string> failures;
  for (int k = 1; k <= n; ++k) {
    long paths = 0;
    long words = 0;
    for_each_two_colored(n - 1, n - k, [&](const oracle::ColoredDyckPath& p) {
      ++paths;
      ++pairs;
      oracle::BallotWord w = oracle::dyck_to_ballot(p);
      oracle::ColoredDyckPath back = oracle::ballot_to_dyck(w);
      if (!(back == p)) {
        failures.push_back("path " + colored_to_text(p) +
                           " did not survive the roundtrip");
      }
    });
    oracle::for_each_ballot(n - 1, k - 1, [&](const oracle::BallotWord& w) {
      ++words;
      oracle::ColoredDyckPath p = oracle::ballot_to_dyck(w);
      oracle::BallotWord back = oracle::dyck_to_ballot(p);
      if (!(back == w)) {
        failures.push_back("word " + ballot_text(w) +
                           " did not survive the roundtrip");
      }
    });
    if (paths != words) {
      failures.push_back("cardinality mismatch at k=" + std::to_string(k) +
                         ": " + std::to_string(paths) + " paths vs " +
                         std::to_string(words) + " words");
    }
  }
  if (failures.empty()) {
    std::cout << "ok, " << pairs << " pairs\n";
    return 0;
  }
  for (const std::string& f : failures) std::cout << f << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sequences, triangles, brute-force oracles, and identity "
               "verdicts for colored-hill path counting"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"table", "csv", "json", "bfile"};

  CLI::App* seq = app.add_subcommand("seq", "print a tower sequence");
  int seq_m = 0;
  int seq_n = 10;
  std::string seq_fmt = "table";
  seq->add_option("--m", seq_m, "tower level, 0..4")
      ->required()
      ->check(CLI::Range(0, 4));
  seq->add_option("--n", seq_n, "prefix length")->check(CLI::PositiveNumber);
  seq->add_option("--format", seq_fmt)->check(CLI::IsMember(formats));

  CLI::App* tri = app.add_subcommand("triangle", "print a colored-hill triangle");
  int tri_m = 0;
  int tri_rows = 8;
  std::string tri_method = "conv";
  std::string tri_fmt = "table";
  tri->add_option("--m", tri_m, "triangle index, 1..4")
      ->required()
      ->check(CLI::Range(1, 4));
  tri->add_option("--rows", tri_rows)->check(CLI::PositiveNumber);
  tri->add_option("--method", tri_method)
      ->check(CLI::IsMember({"conv", "matrix", "closed"}));
  tri->add_option("--format", tri_fmt)->check(CLI::IsMember(formats));

  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  std::string verify_id;
  int verify_max_n = 20;
  bool verify_all = false;
  std::string verify_fmt = "table";
  CLI::Option* id_opt =
      verify->add_option("--id", verify_id, "identity id or family prefix");
  verify->add_flag("--all", verify_all, "run the whole registry (default)")
      ->excludes(id_opt);
  verify->add_option("--max-n", verify_max_n)->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_fmt)->check(CLI::IsMember(formats));

  CLI::App* orc = app.add_subcommand("oracle", "exhaustive counts");
  std::string orc_kind;
  int orc_n = 0;
  int orc_k = -1;
  int orc_m = -1;
  std::string orc_fmt = "table";
  orc->add_option("kind", orc_kind, "colored | total | ballot | ternary")
      ->required()
      ->check(CLI::IsMember({"colored", "total", "ballot", "ternary"}));
  orc->add_option("--n", orc_n)->required()->check(CLI::PositiveNumber);
  orc->add_option("--k", orc_k)->check(CLI::PositiveNumber);
  orc->add_option("--m", orc_m)->check(CLI::PositiveNumber);
  orc->add_option("--format", orc_fmt)->check(CLI::IsMember(formats));

  CLI::App* bij = app.add_subcommand("bijection", "two-color paths vs ballot words");
  std::string bij_mode;
  int bij_n = 0;
  int bij_k = 0;
  bij->add_option("mode", bij_mode, "list | roundtrip")
      ->required()
      ->check(CLI::IsMember({"list", "roundtrip"}));
  bij->add_option("--n", bij_n)->required()->check(CLI::PositiveNumber);
  bij->add_option("--k", bij_k)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (seq->parsed()) {
      finecat::Sequence s = core::tower_sequence(seq_m, seq_n);
      std::cout << render::render_sequence(s, render::parse_format(seq_fmt));
      return 0;
    }
    if (tri->parsed()) {
      finecat::Triangle t = triangle_by_method(tri_m, tri_rows, tri_method);
      std::cout << render::render_triangle(t, tri_m, tri_method,
                                           render::parse_format(tri_fmt));
      return 0;
    }
    if (verify->parsed()) {
      std::vector<identities::IdentityRecord> registry =
          identities::build_registry(identities::Formulas::standard());
      std::vector<identities::EvalResult> results =
          verify_id.empty()
              ? identities::run_all(registry, verify_max_n)
              : identities::run_matching(registry, verify_id, verify_max_n);
      std::cout << render::render_reports(results,
                                          render::parse_format(verify_fmt));
      return identities::all_matched(results) ? 0 : 1;
    }
    if (orc->parsed()) {
      finecat::Int value;
      if (orc_kind == "colored") {
        if (orc_k < 1 || orc_m < 1) {
          throw std::invalid_argument("oracle colored needs --k and --m");
        }
        value = oracle::count_colored(orc_n, orc_k, orc_m);
      } else if (orc_kind == "total") {
        if (orc_m < 1) throw std::invalid_argument("oracle total needs --m");
        value = oracle::count_total(orc_n, orc_m);
      } else if (orc_kind == "ballot") {
        if (orc_k < 1) throw std::invalid_argument("oracle ballot needs --k");
        value = oracle::count_ballot(orc_n, orc_k);
      } else {
        if (orc_k < 1) throw std::invalid_argument("oracle ternary needs --k");
        value = oracle::count_ternary_g4(orc_n, orc_k);
      }
      std::cout << render::render_value(value, render::parse_format(orc_fmt));
      return 0;
    }
    if (bij->parsed()) {
      if (bij_mode == "list") {
        if (bij_k == 0) throw std::invalid_argument("bijection list needs --k");
        return cmd_bijection_list(bij_n, bij_k);
      }
      return cmd_bijection_roundtrip(bij_n);
    }
  } catch (const finecat::resource_limit_error& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const identities::unknown_identity& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
