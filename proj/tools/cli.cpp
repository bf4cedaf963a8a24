#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "genuskit/acceptance.hpp"
#include "genuskit/atom_catalog.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/finite_ring.hpp"
#include "genuskit/matrix_mod.hpp"
#include "genuskit/order_genus.hpp"
#include "json.hpp"

namespace genuskit::cli {

namespace {

using Json = nlohmann::ordered_json;

// What a verb produces: a human rendering, a machine result, and its status.
struct Outcome {
  std::string text;
  Json result;
  int status = kOk;
};

std::size_t parse_cap(const std::string& text, const char* source) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || value == 0 || text.front() == '-') {
    throw InvalidArgument(std::string(source) + ": expected a positive integer, got '" + text +
                          "'");
  }
  return static_cast<std::size_t>(value);
}

std::string table_a_text(const Json& rows) {
  std::ostringstream os;
  os << std::setw(3) << "v" << std::setw(4) << "d" << std::setw(4) << "m" << std::setw(10)
     << "g(brute)" << std::setw(12) << "g(formula)" << '\n';
  for (const auto& row : rows) {
    os << std::setw(3) << row["v"].get<int>() << std::setw(4) << row["d"].get<int>()
       << std::setw(4) << row["m"].get<int>() << std::setw(10) << row["brute"].get<int>()
       << std::setw(12) << row["formula"].get<int>() << '\n';
  }
  return os.str();
}

Outcome table_a(std::size_t cap) {
  Json rows = Json::array();
  bool agree = true;
  for (int v = 1; v <= 12; ++v) {
    const auto atom = Atom::atom_a(v, 4);
    const auto d = gcd(v, 24);
    const auto m = 24 / d;
    const auto brute = genus_of_atom(atom, cap);
    const auto formula = genus_pullback_formula(m);
    agree = agree && brute == formula;
    rows.push_back(Json{{"v", v}, {"d", d}, {"m", m}, {"brute", brute}, {"formula", formula}});
  }
  Outcome o{table_a_text(rows), rows, agree ? kOk : kInternalError};
  return o;
}

Outcome check(std::size_t cap) {
  acceptance::Config config;
  config.cap = cap;
  auto results = acceptance::run_all(config);
  std::ostringstream text;
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    acceptance::print(text, r);
    all = all && r.passed;
    checks.push_back(Json{{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"expected", r.expected},
                          {"actual", r.actual}});
  }
  text << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return Outcome{text.str(), Json{{"passed", all}, {"checks", checks}}, all ? kOk : kInvalidInput};
}

std::string join_sizes(const std::vector<std::vector<Code>>& blocks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i].size();
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cap) {
  CLI::App app{"Genus of orders in products of integer matrix rings", "genuskit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json = false;
  std::optional<std::string> cap_flag;
  app.add_flag("--json", json, "Emit a single JSON object");
  app.add_option("--cap", cap_flag, "Maximum number of stored group/ring elements")
      ->type_name("N");

  Json inputs = Json::object();
  std::function<Outcome(std::size_t)> action;
  std::string verb;

  std::int64_t m = 0;
  int r = 0;
  std::string path;
  std::string atom_text;

  auto* totient_cmd = app.add_subcommand("totient", "Euler's function phi(m)");
  totient_cmd->add_option("m", m)->required();
  totient_cmd->callback([&] {
    inputs = Json{{"m", m}};
    action = [&](std::size_t) {
      auto t = totient(m);
      return Outcome{std::to_string(t) + "\n", t};
    };
  });

  auto* gl_cmd = app.add_subcommand("gl-order", "Order of GL(r, Z/m) by enumeration");
  gl_cmd->add_option("r", r)->required();
  gl_cmd->add_option("m", m)->required();
  gl_cmd->callback([&] {
    inputs = Json{{"r", r}, {"m", m}};
    action = [&](std::size_t cap) {
      auto n = enumerate_gl(r, m, cap).order();
      return Outcome{std::to_string(n) + "\n", n};
    };
  });

  auto* si_cmd = app.add_subcommand("stable-image", "Subgroup generated by elementary matrices");
  si_cmd->add_option("r", r)->required();
  si_cmd->add_option("m", m)->required();
  si_cmd->callback([&] {
    inputs = Json{{"r", r}, {"m", m}};
    action = [&](std::size_t cap) {
      auto image = stable_image(r, m, cap).order();
      auto gl = enumerate_gl(r, m, cap).order();
      return Outcome{"order=" + std::to_string(image) + " gl_order=" + std::to_string(gl) +
                         " index=" + std::to_string(gl / image) + "\n",
                     Json{{"order", image}, {"glOrder", gl}, {"index", gl / image}}};
    };
  });

  auto* dc_cmd = app.add_subcommand("double-cosets", "Double-coset partition for an order spec");
  dc_cmd->add_option("spec", path, "OrderSpec JSON file")->required();
  dc_cmd->callback([&] {
    inputs = Json{{"spec", path}};
    action = [&](std::size_t cap) {
      auto blocks = genus_partition(load_order_spec(path), cap);
      Json sizes = Json::array();
      for (const auto& b : blocks) sizes.push_back(b.size());
      return Outcome{"count=" + std::to_string(blocks.size()) + " sizes=" + join_sizes(blocks) +
                         "\n",
                     Json{{"count", blocks.size()}, {"blockSizes", sizes}}};
    };
  });

  auto* go_cmd = app.add_subcommand("genus-order", "Genus of the order in a spec file");
  go_cmd->add_option("spec", path, "OrderSpec JSON file")->required();
  go_cmd->callback([&] {
    inputs = Json{{"spec", path}};
    action = [&](std::size_t cap) {
      auto g = genus(load_order_spec(path), cap);
      std::ostringstream os;
      os << "relative=" << g.relative << " maximal=" << g.maximal << " total=" << g.total
         << " bound=" << g.bound << '\n';
      return Outcome{os.str(), Json{{"relative", g.relative},
                                    {"maximal", g.maximal},
                                    {"total", g.total},
                                    {"bound", g.bound}}};
    };
  });

  auto* gp_cmd = app.add_subcommand("genus-pullback", "Genus of Z x_m Z, brute force and closed form");
  gp_cmd->add_option("m", m)->required();
  gp_cmd->callback([&] {
    inputs = Json{{"m", m}};
    action = [&](std::size_t cap) {
      auto brute = genus(pullback_spec(m), cap).total;
      auto formula = genus_pullback_formula(m);
      return Outcome{"brute=" + std::to_string(brute) + " formula=" + std::to_string(formula) +
                         "\n",
                     Json{{"brute", brute}, {"formula", formula}},
                     brute == formula ? kOk : kInternalError};
    };
  });

  auto* ga_cmd = app.add_subcommand("genus-atom", "Genus of a catalog atom, e.g. \"A(5)@10\"");
  ga_cmd->add_option("atom", atom_text)->required();
  ga_cmd->callback([&] {
    inputs = Json{{"atom", atom_text}};
    action = [&](std::size_t cap) {
      auto g = genus_of_atom(parse_atom(atom_text), cap);
      return Outcome{std::to_string(g) + "\n", g};
    };
  });

  app.add_subcommand("table-A", "Genus table for the atoms A(v), v = 1..12")->callback([&] {
    action = table_a;
  });
  app.add_subcommand("check", "Run the acceptance checks")->callback([&] { action = check; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  verb = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    std::size_t cap = kDefaultEnumerationCap;
    if (cap_flag) {
      cap = parse_cap(*cap_flag, "--cap");
    } else if (env_cap) {
      cap = parse_cap(*env_cap, "GENUSKIT_CAP");
    }
    outcome = action(cap);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (json) {
    Json doc{{"verb", verb}, {"inputs", inputs}, {"result", outcome.result},
             {"elapsedMs", elapsed}};
    out << doc.dump() << '\n';
  } else {
    out << outcome.text;
  }
  if (outcome.status == kInternalError) err << "internal error: brute force disagrees with formula\n";
  else if (outcome.status != kOk) err << "checks failed\n";
  return outcome.status;
}

}  // namespace genuskit::cli
