#include "multireg/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "multireg/fat_points.hpp"
#include "multireg/hilbert.hpp"
#include "multireg/regularity.hpp"
#include "multireg/scheme_io.hpp"

namespace multireg::cli {

namespace {

/// Raised when --generic is given but the support fails the check.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SchemeFile load(const std::string& path) {
  SchemeFile file = [&] {
    if (path != "-") return read_scheme_file(path);
    const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_scheme(text);
  }();
  if (const char* env = std::getenv("MULTIREG_FIELD"); env != nullptr && *env != '\0') {
    file.field = parse_field_spec(env);
  }
  return file;
}

void note_field(const Field& field, std::ostream& err) {
  if (!field.is_rational()) {
    err << "note: computing over F_p with p = " << field.modulus()
        << "; results are probabilistic\n";
  }
}

void require_generic(const FatPointScheme& z, const Field& field) {
  HilbertTable support(z.support(), field);
  const auto box = Multidegree::constant(z.shape().k(), static_cast<int>(z.size()));
  const auto check = generic_position_check(support, box);
  if (!check.generic) {
    throw GenericityError("support is not in generic position: H" +
                          check.first_failure->to_string() + " = " +
                          std::to_string(check.observed) + ", expected " +
                          std::to_string(check.expected));
  }
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_degree(const SchemeFile& f, std::ostream& out) {
  out << degree(f.scheme) << '\n';
  return kSuccess;
}

int cmd_hilbert(const SchemeFile& f, const std::vector<int>& box_arg, std::optional<int> coarse,
                bool csv, std::ostream& out) {
  const auto& z = f.scheme;
  const std::size_t k = z.shape().k();
  HilbertTable table(z, f.field);
  const bool show_box = !box_arg.empty() || !coarse;
  if (show_box) {
    Multidegree upper = box_arg.empty() ? Multidegree::constant(k, z.multiplicity_sum())
                                        : Multidegree(box_arg);
    if (upper.size() != k || !upper.is_nonnegative()) {
      throw std::invalid_argument("--box needs " + std::to_string(k) + " nonnegative coordinates");
    }
    const HilbertBox box = hilbert_box(table, upper);
    if (csv) {
      out << to_csv(box);
    } else if (k == 2) {
      for (int i = 0; i <= upper[0]; ++i) {
        for (int j = 0; j <= upper[1]; ++j) out << (j ? " " : "") << box.at(Multidegree{i, j});
        out << '\n';
      }
    } else {
      std::size_t index = 0;
      for_each_in_box(upper, [&](const Multidegree& d) {
        out << d.to_string() << ' ' << box.values[index++] << '\n';
      });
    }
  }
  if (coarse) {
    if (*coarse < 0) throw std::invalid_argument("--coarse must be >= 0");
    if (csv) {
      out << "t,H\n";
      for (int t = 0; t <= *coarse; ++t) out << t << ',' << coarse_hilbert(table, t) << '\n';
    } else {
      out << "coarse:";
      for (int t = 0; t <= *coarse; ++t) out << ' ' << coarse_hilbert(table, t);
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_region(const SchemeFile& f, bool human, std::ostream& out) {
  HilbertTable table(f.scheme, f.field);
  const UpSet region = reg_region(table);
  out << (human ? region.describe() : region_to_json(region)) << '\n';
  return kSuccess;
}

int cmd_resvector(const SchemeFile& f, std::ostream& out) {
  out << res_reg_vector(f.scheme, f.field).r.to_string() << '\n';
  return kSuccess;
}

int cmd_bounds(const SchemeFile& f, bool generic, std::ostream& out) {
  const auto& z = f.scheme;
  if (generic) require_generic(z, f.field);
  HilbertTable table(z, f.field);
  const UpSet region = reg_region(table);
  const auto r = res_reg_vector(z, f.field);
  bool ok = true;
  auto line = [&](const std::string& name, const UpSet& bound) {
    const bool inside = region.contains(bound);
    ok = ok && inside;
    out << name << ' ' << bound.describe() << ' ' << verdict(inside) << '\n';
  };
  line("resvector", r.region());
  line("resolution-shift", region_from_resvector(r.r, z.shape().dimension() + 1));
  const auto dg = davis_geramita_bounds(z, generic);
  line("davis-geramita", dg.total);
  if (dg.generic) line("davis-geramita-generic", *dg.generic);
  if (generic && z.shape() == SpaceShape{1, 1}) {
    line("p1xp1-generic", p1xp1_generic_region(z.multiplicities()));
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_acm(const SchemeFile& f, std::ostream& out) {
  HilbertTable table(f.scheme, f.field);
  const AcmVerdict v = acm_check_p1xp1(table);
  if (v.acm_consistent) {
    out << "ACM-consistent\n";
  } else {
    out << "NotACM witness=" << v.witness->to_string() << " value=" << v.witness_value << " ("
        << v.reason << ")\n";
  }
  return kSuccess;
}

int cmd_verify(const SchemeFile& f, bool generic, std::ostream& out) {
  const auto& z = f.scheme;
  if (generic) require_generic(z, f.field);
  const std::size_t k = z.shape().k();
  const int sigma = z.multiplicity_sum();
  const Multidegree box = Multidegree::constant(k, sigma);
  HilbertTable table(z, f.field);
  table.fill_box(box);
  const std::uint64_t deg = table.degree();

  bool all = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    out << verdict(ok) << ' ' << name << ": " << detail << '\n';
  };

  bool cap = table.value(box) == deg;
  std::string cap_detail = "H" + box.to_string() + " = " + std::to_string(table.value(box)) +
                           ", deg Z = " + std::to_string(deg);
  bool monotone = true;
  bool stall = true;
  std::string mono_detail = "every cell of [0," + std::to_string(sigma) + "]^" + std::to_string(k);
  std::string stall_detail = mono_detail;
  for_each_in_box(box, [&](const Multidegree& d) {
    const auto h = table.value(d);
    if (h > deg && cap) {
      cap = false;
      cap_detail = "H" + d.to_string() + " = " + std::to_string(h) + " exceeds deg Z";
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Multidegree up = d + Multidegree::unit(k, j);
      if (up[j] > sigma) continue;
      const auto h1 = table.value(up);
      if (h > h1 && monotone) {
        monotone = false;
        mono_detail = "H" + d.to_string() + " > H" + up.to_string();
      }
      const Multidegree up2 = up + Multidegree::unit(k, j);
      if (up2[j] <= sigma && h == h1 && table.value(up2) != h1 && stall) {
        stall = false;
        stall_detail = "H stalls at " + d.to_string() + " but grows at " + up2.to_string();
      }
    }
  });
  report("degree-cap", cap, cap_detail);
  report("monotone", monotone, mono_detail);
  report("stall-then-stable", stall, stall_detail);

  bool axis_ok = true;
  std::string axis_detail = "t <= " + std::to_string(sigma) + " on every axis";
  for (std::size_t i = 0; i < k; ++i) {
    HilbertTable image(project(z, i), f.field);
    for (int t = 0; t <= sigma; ++t) {
      const auto lhs = table.value(Multidegree::unit(k, i) * t);
      const auto rhs = image.value(Multidegree{t});
      if (lhs != rhs && axis_ok) {
        axis_ok = false;
        axis_detail = "axis " + std::to_string(i + 1) + ", t = " + std::to_string(t) + ": " +
                      std::to_string(lhs) + " != " + std::to_string(rhs);
      }
    }
  }
  report("axis-identity", axis_ok, axis_detail);

  const UpSet region = reg_region(table);
  const auto r = res_reg_vector(z, f.field);
  report("lower-bound", region.contains(r.region()), r.r.to_string() + " + N^" + std::to_string(k));
  const auto shift = region_from_resvector(r.r, z.shape().dimension() + 1);
  report("resolution-shift", region.contains(shift), shift.describe());
  const auto dg = davis_geramita_bounds(z, generic);
  report("davis-geramita", region.contains(dg.total), dg.total.describe());
  if (dg.generic) report("davis-geramita-generic", region.contains(*dg.generic), dg.generic->describe());

  if (z.shape() == SpaceShape{1, 1}) {
    if (generic) {
      const auto mults = z.multiplicities();
      const UpSet p1 = p1xp1_generic_region(mults);
      report("p1xp1-generic", region.contains(p1), p1.describe());

      const auto c = eventual_values(mults);
      bool eventual = true;
      std::string eventual_detail = "c = (";
      for (std::size_t j = 0; j < c.size(); ++j) eventual_detail += (j ? "," : "") + std::to_string(c[j]);
      eventual_detail += ")";
      for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        for (int i = sigma - 1; i <= sigma; ++i) {
          const auto cj = c[static_cast<std::size_t>(j)];
          if (table.value(Multidegree{i, j}) != cj || table.value(Multidegree{j, i}) != cj) {
            if (eventual) eventual_detail = "mismatch at " + Multidegree{i, j}.to_string();
            eventual = false;
          }
        }
      }
      report("eventual-values", eventual, eventual_detail);

      bool poly = true;
      std::string poly_detail = "t in [" + std::to_string(sigma - 1) + "," + std::to_string(sigma + 3) + "]";
      for (int t = sigma - 1; t <= sigma + 3; ++t) {
        const auto lhs = static_cast<std::int64_t>(coarse_hilbert(table, t));
        const auto rhs = hilbert_polynomial_p1xp1(mults, t);
        if (lhs != rhs && poly) {
          poly = false;
          poly_detail = "t = " + std::to_string(t) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
        }
      }
      report("coarse-polynomial", poly, poly_detail);
    }
    const auto acm = verify_acm_equality(table);
    std::string detail = acm.verdict.acm_consistent ? "ACM-consistent" : "NotACM";
    detail += std::string(", inclusion ") + (acm.inclusion ? "holds" : "fails");
    detail += std::string(", equality ") + (acm.equality ? "holds" : "fails");
    report("acm-equality", acm.consistent(), detail);
  }
  return all ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multigraded regularity of fat points in products of projective spaces",
               args.empty() ? "multireg" : args.front()};
  app.require_subcommand(1);

  std::string file;
  std::vector<int> box;
  int coarse = -1;
  bool csv = false;
  bool human = false;
  bool generic = false;
  std::vector<int> spaces;
  std::vector<int> mults;
  std::uint64_t seed = 1;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "scheme JSON file, or - for stdin")->required();
  };
  auto* degree_cmd = app.add_subcommand("degree", "print deg Z");
  add_file(degree_cmd);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "print the multigraded Hilbert function");
  add_file(hilbert_cmd);
  hilbert_cmd->add_option("--box", box, "upper corner i1,...,ik of the table")->delimiter(',');
  auto* coarse_opt = hilbert_cmd->add_option("--coarse", coarse, "print the N^1 coarsening for t <= T");
  hilbert_cmd->add_flag("--csv", csv, "CSV output");
  auto* region_cmd = app.add_subcommand("region", "print the corners of reg_B(Z)");
  add_file(region_cmd);
  region_cmd->add_flag("--human", human, "render as a union of translated orthants");
  auto* resvector_cmd = app.add_subcommand("resvector", "print the resolution regularity vector");
  add_file(resvector_cmd);
  auto* bounds_cmd = app.add_subcommand("bounds", "print closed-form bound regions with containment checks");
  add_file(bounds_cmd);
  bounds_cmd->add_flag("--generic", generic, "assert generic support (checked)");
  auto* acm_cmd = app.add_subcommand("acm", "first-difference ACM test in P^1 x P^1");
  add_file(acm_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "check every applicable invariant");
  add_file(verify_cmd);
  verify_cmd->add_flag("--generic", generic, "assert generic support (checked)");
  auto* random_cmd = app.add_subcommand("random", "emit a random scheme as JSON");
  random_cmd->add_option("--spaces", spaces, "factor dimensions n1,...,nk")->delimiter(',')->required();
  random_cmd->add_option("--mults", mults, "multiplicities m1,...,ms")->delimiter(',')->required();
  random_cmd->add_option("--seed", seed, "generator seed");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("multireg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (random_cmd->parsed()) {
      out << scheme_to_json(random_scheme(SpaceShape(spaces), mults, seed)) << '\n';
      return kSuccess;
    }
    const SchemeFile f = load(file);
    note_field(f.field, err);
    if (degree_cmd->parsed()) return cmd_degree(f, out);
    if (hilbert_cmd->parsed()) {
      return cmd_hilbert(f, box, coarse_opt->count() ? std::optional<int>(coarse) : std::nullopt, csv,
                         out);
    }
    if (region_cmd->parsed()) return cmd_region(f, human, out);
    if (resvector_cmd->parsed()) return cmd_resvector(f, out);
    if (bounds_cmd->parsed()) return cmd_bounds(f, generic, out);
    if (acm_cmd->parsed()) return cmd_acm(f, out);
    if (verify_cmd->parsed()) return cmd_verify(f, generic, out);
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << '\n';
    return kGenericityFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace multireg::cli
