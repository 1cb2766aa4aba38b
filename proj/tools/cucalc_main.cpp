// cucalc: fusion products, order queries, and verification suites for the
// carrier semigroups and worked examples of this library.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cucalc/axioms.hpp"
#include "cucalc/gallery.hpp"
#include "cucalc/registry.hpp"
#include "cucalc/rep_semiring.hpp"

namespace {

using namespace cucalc;

struct CommonFlags {
  std::uint64_t seed = 1;
  int samples = 100;
  std::string format = "human";
  std::string out_path;
  std::string group_table;
  std::string char_table;
  std::string mutate;
};

void add_report_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "RNG seed for sampled checks");
  cmd->add_option("--samples", f.samples, "sampled cases per law")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "report format")
      ->check(CLI::IsMember({"human", "structured"}));
  cmd->add_option("--out", f.out_path, "also write the output to this file");
}

void add_table_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--group-table", f.group_table, "multiplication table file");
  cmd->add_option("--char-table", f.char_table, "character table file");
}

CheckOptions to_options(const CommonFlags& f) {
  CheckOptions o;
  o.seed = f.seed;
  o.samples = f.samples;
  if (!f.mutate.empty()) {
    if (f.mutate != "wb=leq")
      throw ParseError("unknown mutation '" + f.mutate + "' (supported: wb=leq)");
    o.mutate_wb_to_leq = true;
  }
  return o;
}

void emit(const std::string& text, const CommonFlags& f) {
  std::cout << text;
  if (!f.out_path.empty()) {
    std::ofstream os(f.out_path, std::ios::binary);
    if (!os) throw DomainError("cannot open output file '" + f.out_path + "'");
    os << text;
  }
}

std::string render(const std::vector<Report>& reports, const CommonFlags& f) {
  std::string text;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (f.format == "human") {
      if (i) text += "\n";
      text += reports[i].human();
    } else {
      text += reports[i].structured();
    }
  }
  return text;
}

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::string describe(const GalleryEntry& e) {
  std::string text;
  text += "EXAMPLE " + e.name + "\n";
  text += "SUMMARY " + e.summary + "\n";
  for (const auto& c : e.carriers) text += "CARRIER " + c->name() + "\n";
  if (e.module)
    text += "MODULE " + e.module->name() + " ring " + e.module->ring()->name() + "\n";
  for (const auto& m : e.morphisms)
    text += "MORPHISM " + m->name() + " : " + m->source()->name() + " -> " +
            m->target()->name() + "\n";
  return text;
}

int run(int argc, char** argv) {
  CLI::App app{"computations in the category of abstract Cuntz semigroups"};
  app.require_subcommand(1);

  // fusion <group> <lhs> <rhs>
  std::string fusion_group, fusion_lhs, fusion_rhs;
  CommonFlags fusion_flags;
  CLI::App* fusion = app.add_subcommand("fusion", "product of two representation classes");
  fusion->add_option("group", fusion_group, "group spec (cyclic:<n>, product:..., s3, ...)")
      ->required();
  fusion->add_option("lhs", fusion_lhs, "rep:<m0>,<m1>,...")->required();
  fusion->add_option("rhs", fusion_rhs, "rep:<m0>,<m1>,...")->required();
  add_table_flags(fusion, fusion_flags);
  fusion->add_option("--out", fusion_flags.out_path, "also write the output to this file");

  // order <carrier> <x> <y>
  std::string order_carrier, order_x, order_y;
  CommonFlags order_flags;
  CLI::App* order = app.add_subcommand("order", "compare two elements of a carrier");
  order->add_option("carrier", order_carrier, "carrier name")->required();
  order->add_option("x", order_x, "element literal")->required();
  order->add_option("y", order_y, "element literal")->required();
  add_table_flags(order, order_flags);
  order->add_option("--out", order_flags.out_path, "also write the output to this file");

  // axioms <carrier|example:name>
  std::string axioms_target;
  CommonFlags axioms_flags;
  CLI::App* axioms = app.add_subcommand("axioms", "run the verification suites");
  axioms->add_option("carrier", axioms_target, "carrier name or example:<name>")->required();
  axioms->add_option("--mutate", axioms_flags.mutate,
                     "debug mutation applied to the checked relations (wb=leq)");
  add_report_flags(axioms, axioms_flags);
  add_table_flags(axioms, axioms_flags);

  // example <name> | example --list
  std::string example_name;
  bool example_verify = false;
  bool example_list = false;
  CommonFlags example_flags;
  CLI::App* example = app.add_subcommand("example", "inspect or verify a worked example");
  example->add_option("name", example_name, "example name (one of the --list families)");
  example->add_flag("--list", example_list, "print the family templates");
  example->add_flag("--verify", example_verify, "run the full verification battery");
  add_report_flags(example, example_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (fusion->parsed()) {
    RepSemiringPtr ring =
        resolve_rep_semiring(fusion_group, fusion_flags.group_table, fusion_flags.char_table);
    const Elem x = ring->parse(fusion_lhs);
    const Elem y = ring->parse(fusion_rhs);
    emit(ring->format(ring->tensor(x, y)) + "\n", fusion_flags);
    return 0;
  }

  if (order->parsed()) {
    ResolveOptions ro{order_flags.group_table, order_flags.char_table};
    SemigroupPtr S = resolve_semigroup(order_carrier, ro);
    const Elem x = S->parse(order_x);
    const Elem y = S->parse(order_y);
    const bool le = S->leq(x, y), ge = S->leq(y, x);
    std::string text = std::string("ORDER ") +
                       (le && ge ? "EQ" : le ? "LT" : ge ? "GT" : "INCOMPARABLE") + "\n";
    text += std::string("WAY_BELOW x<<y ") + (S->way_below(x, y) ? "yes" : "no") + "\n";
    text += std::string("WAY_BELOW y<<x ") + (S->way_below(y, x) ? "yes" : "no") + "\n";
    emit(text, order_flags);
    return 0;
  }

  if (axioms->parsed()) {
    const CheckOptions opts = to_options(axioms_flags);
    std::vector<Report> reports;
    if (axioms_target.rfind("example:", 0) == 0) {
      GalleryEntry e = gallery_entry(axioms_target.substr(8));
      reports = e.verify(opts);
    } else {
      ResolveOptions ro{axioms_flags.group_table, axioms_flags.char_table};
      reports.push_back(check_axioms(resolve_semigroup(axioms_target, ro), opts));
    }
    emit(render(reports, axioms_flags), axioms_flags);
    return all_pass(reports) ? 0 : 1;
  }

  if (example_list) {
    std::string text;
    for (const auto& f : gallery_families()) text += f + "\n";
    emit(text, example_flags);
    return 0;
  }
  if (example_name.empty()) throw ParseError("example wants a name (or --list)");
  GalleryEntry e = gallery_entry(example_name);
  std::string text = describe(e);
  bool ok = true;
  if (example_verify) {
    const std::vector<Report> reports = e.verify(to_options(example_flags));
    text += render(reports, example_flags);
    ok = all_pass(reports);
  }
  emit(text, example_flags);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cucalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cucalc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
