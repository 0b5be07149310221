#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "t21/codes.hpp"
#include "t21/families.hpp"
#include "t21/fixtures.hpp"
#include "t21/fwht.hpp"
#include "t21/gf.hpp"
#include "t21/mapping.hpp"
#include "t21/polysolve.hpp"
#include "t21/search.hpp"

namespace {

using nlohmann::ordered_json;

struct FieldArgs {
  int k = 0, l = 0;
  std::uint32_t modulus = 0;  // 0 = lex-smallest

  t21::Field make() const {
    return modulus ? t21::Field(k, l, modulus) : t21::Field(k, l);
  }
};

void add_field_options(CLI::App* cmd, FieldArgs& fa) {
  cmd->add_option("--k", fa.k, "subfield exponent k (q = 2^k)")->required();
  cmd->add_option("--l", fa.l, "extension degree l")->required();
  cmd->add_option("--modulus", fa.modulus,
                  "modulus polynomial bitmask (default: lex-smallest)");
}

ordered_json hits_to_json(const t21::Field& f,
                          const std::vector<t21::SearchHit>& hits) {
  ordered_json arr = ordered_json::array();
  for (const t21::SearchHit& h : hits) {
    ordered_json j;
    j["outer_d"] = h.outer_d;
    j["inner"] = h.inner;
    j["c_range"] = t21::c_range_name(t21::classify_c_range(f, h.cs));
    j["cs"] = h.cs;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_hits(const t21::Field& f, const std::vector<t21::SearchHit>& hits,
                bool json, const std::string& out_path) {
  const ordered_json arr = hits_to_json(f, hits);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << arr.dump(2) << "\n";
  }
  if (json || out_path.empty()) {
    if (json) {
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& j : arr)
        std::cout << "outer_d=" << j["outer_d"] << " inner=" << j["inner"]
                  << " c_range=" << j["c_range"].get<std::string>()
                  << " |cs|=" << j["cs"].size() << "\n";
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"2-to-1 trace-form mapping toolkit"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: all cores)")
      ->envname("T21_JOBS");

  // field-info
  auto* c_info = app.add_subcommand("field-info", "describe GF(2^(k*l))");
  FieldArgs fa_info;
  bool info_json = false;
  add_field_options(c_info, fa_info);
  c_info->add_flag("--json", info_json, "JSON output");

  // check
  auto* c_check =
      app.add_subcommand("check", "verify a mapping spec (JSON on stdin)");
  bool check_stdin = true, check_json = false;
  c_check->add_flag("--stdin", check_stdin, "read the spec from stdin");
  c_check->add_flag("--json", check_json, "JSON output");

  // construct
  auto* c_cons = app.add_subcommand("construct", "build a family instance");
  FieldArgs fa_cons;
  std::string cons_family;
  std::uint32_t cons_c = 0;
  add_field_options(c_cons, fa_cons);
  c_cons->add_option("--family", cons_family, "family id, e.g. T32_1")
      ->required();
  c_cons->add_option("--c", cons_c, "coefficient c")->required();

  // verify-family
  auto* c_ver = app.add_subcommand("verify-family",
                                   "verify all admissible c of a family");
  FieldArgs fa_ver;
  std::string ver_family;
  bool ver_json = false;
  add_field_options(c_ver, fa_ver);
  c_ver->add_option("--family", ver_family, "family id")->required();
  c_ver->add_flag("--json", ver_json, "JSON output");

  // search-single / search-double
  FieldArgs fa_s1, fa_s2;
  bool s1_json = false, s2_json = false, s1_long = false, s2_long = false;
  std::string s1_out, s2_out;
  auto* c_s1 = app.add_subcommand(
      "search-single", "exhaustive c*x^d1 + Tr(x^d2) search");
  add_field_options(c_s1, fa_s1);
  c_s1->add_flag("--json", s1_json, "JSON output");
  c_s1->add_flag("--long-run", s1_long, "allow k*l > 10");
  c_s1->add_option("--out", s1_out, "write hits JSON to file");
  auto* c_s2 = app.add_subcommand(
      "search-double", "exhaustive c*x^d + Tr(x^d1 + x^d2) search");
  add_field_options(c_s2, fa_s2);
  c_s2->add_flag("--json", s2_json, "JSON output");
  c_s2->add_flag("--long-run", s2_long, "allow k*l > 10");
  c_s2->add_option("--out", s2_out, "write hits JSON to file");

  // diff-tables
  auto* c_diff =
      app.add_subcommand("diff-tables", "compare a search against a fixture");
  FieldArgs fa_diff;
  std::string diff_which;
  bool diff_long = false;
  add_field_options(c_diff, fa_diff);
  c_diff->add_option("--which", diff_which, "table: 3-1 or 4-1")
      ->required()
      ->check(CLI::IsMember({"3-1", "4-1"}));
  c_diff->add_flag("--long-run", diff_long, "allow k*l > 10");

  // code
  auto* c_code = app.add_subcommand("code", "build the linear code C_f");
  FieldArgs fa_code;
  std::string code_family, code_csv;
  std::uint32_t code_c = 0;
  bool code_json = false;
  add_field_options(c_code, fa_code);
  c_code->add_option("--family", code_family, "family id")->required();
  c_code->add_option("--c", code_c, "coefficient c")->required();
  c_code->add_option("--emit-weights", code_csv,
                     "write weight,multiplicity CSV");
  c_code->add_flag("--json", code_json, "JSON output");

  // classify
  auto* c_cls = app.add_subcommand(
      "classify", "factorization pattern of a cubic/quartic");
  FieldArgs fa_cls;
  std::string cls_type;
  std::uint32_t cls_a2 = 0, cls_a1 = 0, cls_a0 = 0;
  add_field_options(c_cls, fa_cls);
  c_cls->add_option("--type", cls_type, "cubic (x^3+a1*x+a0) or quartic "
                                        "(x^4+a2*x^2+a1*x+a0)")
      ->required()
      ->check(CLI::IsMember({"cubic", "quartic"}));
  c_cls->add_option("--a2", cls_a2, "coefficient of x^2 (quartic only)");
  c_cls->add_option("--a1", cls_a1, "coefficient of x")->required();
  c_cls->add_option("--a0", cls_a0, "constant coefficient")->required();

  // Let global options (--jobs) appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c_info->parsed()) {
    const t21::Field f = fa_info.make();
    if (info_json) {
      std::cout << f.to_json() << "\n";
    } else {
      std::cout << "GF(2^" << f.n() << ") = GF(" << f.q() << "^" << f.l()
                << "), modulus bitmask " << f.modulus() << ", generator "
                << f.generator() << "\n";
    }
    return 0;
  }

  if (c_check->parsed()) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    std::deque<t21::Field> storage;
    const t21::MappingSpec spec = t21::spec_from_json(buf.str(), storage);
    const bool two_to_one = t21::is_two_to_one_count(spec);
    if (check_json) {
      ordered_json j;
      j["two_to_one"] = two_to_one;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (two_to_one ? "2-to-1: true" : "2-to-1: false") << "\n";
    }
    return 0;
  }

  if (c_cons->parsed()) {
    const auto id = t21::family_from_name(cons_family);
    if (!id) throw CLI::ValidationError("--family", "unknown family id");
    const t21::Field f = fa_cons.make();
    std::cout << t21::spec_to_json(t21::build({*id, &f, cons_c})) << "\n";
    return 0;
  }

  if (c_ver->parsed()) {
    const auto id = t21::family_from_name(ver_family);
    if (!id) throw CLI::ValidationError("--family", "unknown family id");
    const t21::Field f = fa_ver.make();
    const t21::FamilyReport rep = t21::verify_family(*id, f);
    if (ver_json) {
      ordered_json j;
      j["family"] = t21::family_name(rep.id);
      j["k"] = rep.k;
      j["l"] = rep.l;
      j["admissible_c"] = rep.admissible_c;
      j["failed_c"] = rep.failed_c;
      j["passed"] = rep.passed();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << rep.admissible_c.size() - rep.failed_c.size() << "/"
                << rep.admissible_c.size() << " admissible c pass\n";
    }
    return rep.passed() ? 0 : 1;
  }

  if (c_s1->parsed()) {
    const t21::Field f = fa_s1.make();
    print_hits(f, t21::run_single_trace(f, jobs, s1_long), s1_json, s1_out);
    return 0;
  }
  if (c_s2->parsed()) {
    const t21::Field f = fa_s2.make();
    print_hits(f, t21::run_double_trace(f, jobs, s2_long), s2_json, s2_out);
    return 0;
  }

  if (c_diff->parsed()) {
    const t21::Field f = fa_diff.make();
    const bool single = diff_which == "3-1";
    const std::vector<t21::SearchHit> hits =
        single ? t21::run_single_trace(f, jobs, diff_long)
               : t21::run_double_trace(f, jobs, diff_long);
    const std::vector<t21::TableRow> rows = t21::load_table_fixture(
        single ? t21::table_3_1_json() : t21::table_4_1_json());
    const t21::DiffReport rep = t21::diff_against_table(f, hits, rows);
    std::cout << rep.to_string();
    return rep.empty() ? 0 : 1;
  }

  if (c_code->parsed()) {
    const auto id = t21::family_from_name(code_family);
    if (!id) throw CLI::ValidationError("--family", "unknown family id");
    const t21::Field f = fa_code.make();
    const t21::CodeReport rep =
        t21::build_code(t21::build({*id, &f, code_c}), jobs);
    if (!code_csv.empty()) {
      std::ofstream out(code_csv);
      out << "weight,multiplicity\n";
      for (const auto& [w, c] : rep.weight_distribution)
        out << w << "," << c << "\n";
    }
    if (code_json) {
      std::cout << t21::code_report_to_json(rep) << "\n";
    } else {
      std::cout << "[" << rep.length << "," << rep.dimension << "] code, d_K="
                << rep.d_K << ", self_orthogonal="
                << (rep.self_orthogonal ? "true" : "false")
                << ", minimal=" << (rep.minimal ? "true" : "false") << " ("
                << rep.minimal_method << ")\n";
      for (const auto& [w, c] : rep.weight_distribution)
        std::cout << "  weight " << w << ": " << c << "\n";
    }
    return 0;
  }

  if (c_cls->parsed()) {
    const t21::Field f = fa_cls.make();
    const t21::FactorPattern p =
        cls_type == "cubic" ? t21::cubic_classify(f, cls_a1, cls_a0)
                            : t21::quartic_classify(f, cls_a2, cls_a1, cls_a0);
    std::cout << t21::pattern_to_string(p) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
