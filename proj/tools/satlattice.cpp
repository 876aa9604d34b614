// Command-line front end: verification, construction, exhaustive search,
// witness analysis, chain extraction and catalog comparison for
// induced-2C2-saturated families in the Boolean lattice.
//
// Exit codes: 0 verified/success, 1 verified-false (not saturated, bounds
// violated, nonempty diff), 2 usage or parse errors.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "satlattice/chain_extract.hpp"
#include "satlattice/constructions.hpp"
#include "satlattice/core.hpp"
#include "satlattice/freeness.hpp"
#include "satlattice/json_io.hpp"
#include "satlattice/search.hpp"
#include "satlattice/text.hpp"
#include "satlattice/witness.hpp"

using namespace satlattice;
using nlohmann::json;

namespace {

constexpr int kExitVerifiedFalse = 1;
constexpr int kExitUsage = 2;

int default_threads() {
  const char* env = std::getenv("SATLATTICE_THREADS");
  if (env == nullptr) return 1;
  int value = std::atoi(env);
  return value >= 1 ? value : 1;
}

// Family input: shorthand ("2,3,1235,1245") or JSON ({"n":5,"sets":[[2],...]});
// with_chain merges the canonical chain into the parsed members.
Family read_family(const std::string& text, int n, bool with_chain) {
  Family f = text.find('{') != std::string::npos
                 ? family_from_json(json::parse(text))
                 : parse_family(text, n);
  if (f.ground_size() != n)
    throw std::invalid_argument("family ground size " +
                                std::to_string(f.ground_size()) +
                                " does not match --n " + std::to_string(n));
  if (!with_chain) return f;
  std::vector<SetWord> members = f.members();
  Family chain = canonical_chain(n);
  members.insert(members.end(), chain.members().begin(), chain.members().end());
  return Family(n, std::move(members));
}

void emit(const json& payload, bool as_json) {
  if (as_json) std::cout << payload.dump(2) << "\n";
}

json header(const char* verb) {
  return json{{"version", kToolVersion}, {"verb", verb}};
}

std::string describe_copy(const InducedCopy& c) {
  return render_set(c.a) + " < " + render_set(c.a_up) + "  ||  " + render_set(c.b) +
         " < " + render_set(c.b_up);
}

SearchConfig make_search_config(int threads) {
  SearchConfig config;
  config.thread_count = threads;
  config.progress = [](std::size_t done, std::size_t total) {
    if (total < 20 || done % (total / 20) == 0 || done == total)
      std::fprintf(stderr, "shards %zu/%zu\n", done, total);
  };
  return config;
}

void write_catalog(const Catalog& catalog, const std::string& out_path,
                   bool as_json, const char* verb) {
  json payload = header(verb);
  payload.update(catalog_to_json(catalog));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write to " + out_path);
    out << payload.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::printf("n=%d size=%d: %zu saturated families, %zu duality classes\n",
                catalog.n, catalog.size, catalog.families.size(),
                catalog.classes.size());
    for (const DualityClass& cls : catalog.classes)
      std::printf("  %-40s %s %s\n", render_family(cls.representative).c_str(),
                  cls.self_dual ? "self-dual" : "dual of",
                  cls.self_dual ? "" : render_family(cls.partner).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"induced-2C2 saturation toolkit for the Boolean lattice"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check a family for saturation");
  struct {
    int n = 0;
    std::string family;
    bool with_chain = true;
    bool as_json = false;
  } vopt;
  verify->add_option("--n", vopt.n, "ground size")->required();
  verify->add_option("--family", vopt.family, "family text or JSON")->required();
  verify->add_flag("--with-chain,!--no-with-chain", vopt.with_chain,
                   "imply the canonical chain (default: on)");
  verify->add_flag("--json", vopt.as_json, "machine output");
  verify->callback([&] {
    Family f = read_family(vopt.family, vopt.n, vopt.with_chain);
    SaturationCheck check = check_saturation(f);
    json payload = header("verify");
    payload["family"] = family_to_json(f);
    payload["free"] = check.free;
    payload["saturated"] = check.saturated;
    if (check.internal_copy) payload["internal_copy"] = copy_to_json(*check.internal_copy);
    if (check.unwitnessed_outsider)
      payload["unwitnessed_outsider"] = set_to_json(*check.unwitnessed_outsider);
    emit(payload, vopt.as_json);
    if (!vopt.as_json) {
      if (check.saturated)
        std::printf("saturated\n");
      else if (!check.free)
        std::printf("not free: induced copy %s\n",
                    describe_copy(*check.internal_copy).c_str());
      else
        std::printf("free but not saturated: adding %s creates no induced copy\n",
                    render_set(*check.unwitnessed_outsider).c_str());
    }
    exit_code = check.saturated ? 0 : kExitVerifiedFalse;
  });

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build a known extremal family");
  struct {
    std::string kind;
    int n = 0;
    int i = 0;
    bool verify_it = false;
    bool as_json = false;
  } copt;
  construct->add_option("--kind", copt.kind, "singletons or fstar")
      ->required()
      ->check(CLI::IsMember({"singletons", "fstar"}));
  construct->add_option("--n", copt.n, "ground size")->required();
  construct->add_option("--i", copt.i, "fstar pivot, 2 <= i <= n-1");
  construct->add_flag("--verify", copt.verify_it, "run the saturation checker");
  construct->add_flag("--json", copt.as_json, "machine output");
  construct->callback([&] {
    ConstructionSpec spec;
    spec.kind = copt.kind == "singletons" ? ConstructionSpec::Kind::singletons
                                          : ConstructionSpec::Kind::f_star;
    spec.n = copt.n;
    spec.i = copt.i;
    if (spec.kind == ConstructionSpec::Kind::f_star && copt.i == 0)
      throw std::invalid_argument("--kind fstar requires --i");
    json payload = header("construct");
    if (copt.verify_it) {
      ConstructionCertificate cert = verify_construction(spec);
      payload.update(certificate_to_json(cert));
      emit(payload, copt.as_json);
      if (!copt.as_json)
        std::printf("%s\n%s\n", render_family(cert.family).c_str(),
                    cert.saturated ? "saturated" : "NOT saturated");
      exit_code = cert.saturated ? 0 : kExitVerifiedFalse;
    } else {
      Family f = spec.kind == ConstructionSpec::Kind::singletons
                     ? build_singletons(spec.n)
                     : build_f_star(spec.n, spec.i);
      payload["family"] = family_to_json(f);
      emit(payload, copt.as_json);
      if (!copt.as_json) std::printf("%s\n", render_family(f).c_str());
    }
  });

  // ---- search / enumerate ----
  struct SearchOpt {
    int n = 0;
    int size = 0;
    bool min = false;
    int threads = default_threads();
    std::string out;
    bool as_json = false;
    bool force = false;
  };
  auto add_search_options = [](CLI::App* cmd, SearchOpt& opt) {
    cmd->add_option("--n", opt.n, "ground size")->required();
    cmd->add_option("--threads", opt.threads, "worker threads");
    cmd->add_option("--out", opt.out, "write the catalog JSON to a file");
    cmd->add_flag("--json", opt.as_json, "machine output");
    cmd->add_flag("--force", opt.force, "acknowledge the cost outside n <= 6");
  };

  auto* search = app.add_subcommand("search", "find the minimum saturated size");
  SearchOpt sopt;
  add_search_options(search, sopt);
  auto* min_flag = search->add_flag("--min", sopt.min, "search upward from n+2 (default)");
  search->add_option("--size", sopt.size, "search one exact size instead")
      ->excludes(min_flag);
  search->callback([&] {
    SearchConfig config = make_search_config(sopt.threads);
    config.allow_large = sopt.force;
    if (sopt.size != 0) {
      write_catalog(enumerate_at(sopt.n, sopt.size, config), sopt.out, sopt.as_json,
                    "search");
    } else {
      auto [min_size, catalog] = search_min(sopt.n, config);
      if (!sopt.as_json) std::printf("minimum size: %d\n", min_size);
      write_catalog(catalog, sopt.out, sopt.as_json, "search");
    }
  });

  auto* enumerate = app.add_subcommand("enumerate", "list saturated families at a size");
  SearchOpt eopt;
  add_search_options(enumerate, eopt);
  enumerate->add_option("--size", eopt.size, "family size (default 2n)");
  enumerate->callback([&] {
    SearchConfig config = make_search_config(eopt.threads);
    config.allow_large = eopt.force;
    int size = eopt.size == 0 ? 2 * eopt.n : eopt.size;
    write_catalog(enumerate_at(eopt.n, size, config), eopt.out, eopt.as_json,
                  "enumerate");
  });

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "witness and load audit");
  struct {
    int n = 0;
    std::string family;
    bool with_chain = true;
    bool as_json = false;
  } aopt;
  analyze->add_option("--n", aopt.n, "ground size")->required();
  analyze->add_option("--family", aopt.family, "family text or JSON")->required();
  analyze->add_flag("--with-chain,!--no-with-chain", aopt.with_chain,
                    "imply the canonical chain (default: on)");
  analyze->add_flag("--json", aopt.as_json, "machine output");
  analyze->callback([&] {
    Family f = read_family(aopt.family, aopt.n, aopt.with_chain);
    AuditReport report = audit(f);
    json payload = header("analyze");
    payload.update(audit_to_json(report));
    emit(payload, aopt.as_json);
    if (!aopt.as_json) {
      std::printf("n=%d members=%zu off-chain=%d shackles=%d\n", report.n, f.size(),
                  report.off_chain_count, report.shackle_count);
      for (const ShackleAudit& sa : report.shackles) {
        if (sa.present) {
          std::printf("  S_%d present\n", sa.index);
        } else {
          std::printf("  S_%d missing: %zu witnesses, configs case1=%d case2=%d case3=%d\n",
                      sa.index, sa.witnesses.size(), sa.case1, sa.case2, sa.case3);
        }
      }
      for (const MemberAudit& ma : report.members) {
        std::printf("  %-10s %s span=(%d,%d) load={", render_set(ma.member).c_str(),
                    ma.is_shackle ? "shackle " : "        ", ma.span.p, ma.span.q);
        for (std::size_t i = 0; i < ma.load.size(); ++i)
          std::printf("%s%d", i ? "," : "", ma.load[i]);
        std::printf("}\n");
      }
      std::printf("inequality n-1 <= 2k: %s, size bound: %s\n",
                  report.inequality_holds ? "holds" : "VIOLATED",
                  report.size_bound_holds ? "holds" : "VIOLATED");
      for (const std::string& finding : report.findings)
        std::printf("finding: %s\n", finding.c_str());
      std::printf("%s\n", report.all_ok() ? "all checks passed" : "CHECKS FAILED");
    }
    exit_code = report.all_ok() ? 0 : kExitVerifiedFalse;
  });

  // ---- extract-chain ----
  auto* extract = app.add_subcommand("extract-chain",
                                     "pull a maximal chain out of a saturated family");
  struct {
    int n = 0;
    std::string family;
    bool with_chain = false;
    bool verify_first = true;
    bool as_json = false;
  } xopt;
  extract->add_option("--n", xopt.n, "ground size")->required();
  extract->add_option("--family", xopt.family, "family text or JSON")->required();
  extract->add_flag("--with-chain,!--no-with-chain", xopt.with_chain,
                    "imply the canonical chain (default: off here)");
  extract->add_flag("--verify,!--no-verify", xopt.verify_first,
                    "re-check saturation before extracting (default: on)");
  extract->add_flag("--json", xopt.as_json, "machine output");
  extract->callback([&] {
    Family f = read_family(xopt.family, xopt.n, xopt.with_chain);
    try {
      ChainExtraction ext = extract_maximal_chain(f, xopt.verify_first);
      json payload = header("extract-chain");
      payload["trace"] = trace_to_json(ext.trace);
      payload["chain"] = family_to_json(ext.chain);
      emit(payload, xopt.as_json);
      if (!xopt.as_json) std::printf("chain: %s\n", render_family(ext.chain).c_str());
    } catch (const ExtractionError& e) {
      std::fprintf(stderr, "extraction failed: %s\n", e.what());
      exit_code = kExitVerifiedFalse;
    } catch (const TrichotomyViolation& e) {
      std::fprintf(stderr, "extraction failed: %s\n", e.what());
      exit_code = kExitVerifiedFalse;
    }
  });

  // ---- catalog-diff ----
  auto* diff_cmd = app.add_subcommand("catalog-diff",
                                      "compare an enumerated catalog with a fixture");
  struct {
    int n = 0;
    int size = 0;
    std::string golden;
    int threads = default_threads();
    bool as_json = false;
    bool force = false;
  } dopt;
  diff_cmd->add_option("--n", dopt.n, "ground size")->required();
  diff_cmd->add_option("--golden", dopt.golden, "fixture file")->required();
  diff_cmd->add_option("--size", dopt.size, "family size (default 2n)");
  diff_cmd->add_option("--threads", dopt.threads, "worker threads");
  diff_cmd->add_flag("--json", dopt.as_json, "machine output");
  diff_cmd->add_flag("--force", dopt.force, "acknowledge the cost outside n <= 6");
  diff_cmd->callback([&] {
    SearchConfig config = make_search_config(dopt.threads);
    config.allow_large = dopt.force;
    int size = dopt.size == 0 ? 2 * dopt.n : dopt.size;
    Catalog catalog = enumerate_at(dopt.n, size, config);
    std::vector<Family> golden = load_fixture_families(dopt.golden, dopt.n);
    CatalogDiff diff = catalog_diff(catalog, golden);
    json payload = header("catalog-diff");
    payload["match"] = diff.empty();
    json only_golden = json::array(), only_catalog = json::array();
    for (const Family& f : diff.only_in_golden) only_golden.push_back(family_to_json(f));
    for (const Family& f : diff.only_in_catalog)
      only_catalog.push_back(family_to_json(f));
    payload["only_in_golden"] = std::move(only_golden);
    payload["only_in_catalog"] = std::move(only_catalog);
    emit(payload, dopt.as_json);
    if (!dopt.as_json) {
      if (diff.empty()) {
        std::printf("catalogs match: %zu families\n", catalog.families.size());
      } else {
        for (const Family& f : diff.only_in_golden)
          std::printf("only in golden:  %s\n", render_family(f).c_str());
        for (const Family& f : diff.only_in_catalog)
          std::printf("only in catalog: %s\n", render_family(f).c_str());
      }
    }
    exit_code = diff.empty() ? 0 : kExitVerifiedFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error at position %zu: %s\n", e.position(), e.what());
    return kExitUsage;
  } catch (const FixtureError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const FeasibilityError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return exit_code;
}
