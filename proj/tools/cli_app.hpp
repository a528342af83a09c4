#ifndef MODBRAID_TOOLS_CLI_APP_HPP_
#define MODBRAID_TOOLS_CLI_APP_HPP_

// The modbraid command line. run() is separate from main so the tests can
// drive it with captured streams.
//
// Exit codes: 0 all cases passed, 1 some case failed, 2 usage or input error.

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modbraid/modbraid.hpp"

namespace modbraid::cli {

  using json = nlohmann::ordered_json;

  inline constexpr int exit_ok    = 0;
  inline constexpr int exit_fail  = 1;
  inline constexpr int exit_usage = 2;

  namespace detail {

    struct Options {
      int                         n = 0;
      std::int64_t                t = 1;
      std::string                 json_path;
      bool                        verbose = false;
      std::string                 cell, p, q, word, ring = "Z", pres, builtin;
      std::int64_t                mod = 4;
      std::optional<std::size_t>  limit;
      std::string                 strategy = "hlt";
      std::string                 table    = "all";
    };

    inline void write_json(std::string const& path, json const& j) {
      if (path.empty()) {
        return;
      }
      std::ofstream f(path);
      if (!f) {
        throw InvalidArgument("cannot write '" + path + "'");
      }
      f << j.dump(2) << "\n";
    }

    inline json result_document(std::string const& command,
                                Options const&     o,
                                json               result) {
      json j;
      j["schema"]  = 1;
      j["version"] = version;
      j["command"] = command;
      j["n"]       = o.n;
      j["result"]  = std::move(result);
      return j;
    }

    inline int finish(VerificationReport const& r,
                      Options const&            o,
                      std::ostream&             out) {
      for (auto const& c : r.cases) {
        if (!c.pass || o.verbose) {
          out << (c.pass ? "PASS " : "FAIL ") << c.id << "\n";
        }
      }
      out << r.suite << " n=" << r.n;
      if (r.t) {
        out << " t=" << *r.t;
      }
      out << ": " << r.passed() << "/" << r.cases.size() << " passed\n";
      write_json(o.json_path, r.to_json());
      return r.ok() ? exit_ok : exit_fail;
    }

    inline void check_degree(int n, int lo, int hi) {
      if (n < lo || n > hi) {
        throw InvalidArgument("--n must be between " + std::to_string(lo)
                              + " and " + std::to_string(hi) + ", got "
                              + std::to_string(n));
      }
    }

    inline RingTag ring_of(std::string const& s, std::int64_t t) {
      if (s == "Z") {
        return RingTag::Z(t);
      }
      if (s == "Z2") {
        return RingTag::Z2();
      }
      throw InvalidArgument("--ring must be Z or Z2, got '" + s + "'");
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    inline VerificationReport verify_tables(Options const& o) {
      check_degree(o.n, 1, 8);
      VerificationReport r{"tables", o.n, o.t, {}};
      auto want = [&](char const* name) {
        return o.table == "all" || o.table == name;
      };
      if (o.table != "all" && o.table != "G" && o.table != "Gt"
          && o.table != "Z") {
        throw InvalidArgument("--table must be G, Gt, Z or all");
      }
      if (want("G")) {
        r.add(verify_relation_table(RelationTable::G, o.n));
      }
      if (want("Gt")) {
        r.add(verify_relation_table(RelationTable::Gt, o.n, o.t));
      }
      if (want("Z")) {
        r.add(verify_relation_table(RelationTable::Z, o.n));
      }
      return r;
    }

    // Associativity of the section-element product and normalization of the
    // bar cocycle, over all of S_n.
    inline VerificationReport verify_cocycle(Options const& o) {
      check_degree(o.n, 1, 5);
      VerificationReport r{"cocycle", o.n, std::nullopt, {}};
      auto const         perms = all_permutations(o.n);
      auto const         id    = Permutation::identity(o.n);
      for (auto const ring : {RingTag::Z(), RingTag::Z2()}) {
        auto const& G     = ExtGroup::shared(o.n, ring);
        auto const  name  = ring.to_string();
        std::size_t bad   = 0, total = 0;
        json        first = nullptr;
        for (auto const& p : perms) {
          auto const a = G.lift(p);
          for (auto const& q : perms) {
            auto const b  = G.lift(q);
            auto const ab = G.mul(a, b);
            for (auto const& s : perms) {
              auto const c = G.lift(s);
              ++total;
              if (G.mul(ab, c) != G.mul(a, G.mul(b, c))) {
                if (bad++ == 0) {
                  first = {p.to_string(), q.to_string(), s.to_string()};
                }
              }
            }
          }
        }
        json d{{"triples", total}, {"failures", bad}};
        if (bad != 0) {
          d["first"] = first;
        }
        r.add("associative " + name, bad == 0, d);

        std::size_t nonzero = 0;
        for (auto const& p : perms) {
          nonzero += G.cocycle(id, p).is_zero() ? 0 : 1;
          nonzero += G.cocycle(p, id).is_zero() ? 0 : 1;
        }
        r.add("normalized " + name, nonzero == 0, {{"nonzero", nonzero}});
      }
      return r;
    }

    inline VerificationReport verify_closed_forms(Options const& o) {
      check_degree(o.n, 2, 8);
      VerificationReport r{"closed-forms", o.n, std::nullopt, {}};
      for (auto const& c : all_cells(o.n)) {
        auto const ph  = phi(c, o.n);
        auto const ka  = kappa(c, o.n);
        auto const vz  = cocycle_via_section(c, o.n, RingTag::Z());
        auto const vz2 = cocycle_via_section(c, o.n, RingTag::Z2());
        auto const id  = c.to_string();
        r.add("phi " + id, ph == vz,
              {{"closed", ph.to_json()}, {"section", vz.to_json()}});
        r.add("kappa " + id, ka == vz2,
              {{"closed", ka.to_json()}, {"section", vz2.to_json()}});
        r.add("eta-phi " + id, eta(ph) == ka,
              {{"eta_phi", eta(ph).to_json()}, {"kappa", ka.to_json()}});
      }
      return r;
    }

    inline VerificationReport verify_split(Options const& o) {
      check_degree(o.n, 2, 8);
      VerificationReport r{"split", o.n, o.t, {}};
      r.add(omega_splitting_check(o.n, o.t));
      return r;
    }

    inline VerificationReport verify_nonsplit(Options const& o) {
      check_degree(o.n, 2, default_search_guard);
      VerificationReport r{"nonsplit", o.n, std::nullopt, {}};
      auto const         found = search_splitting_Zn(o.n);
      json               d{{"search", "lifts of the adjacent transpositions"}};
      if (found) {
        auto w = json::array();
        for (auto const& e : *found) {
          w.push_back(e.to_string());
        }
        d["splitting"] = w;
      }
      r.add("no splitting", !found, d);
      return r;
    }

    inline VerificationReport verify_b4_generators(Options const& o) {
      check_degree(o.n, 1, 8);
      VerificationReport r{"b4-generators", o.n, std::nullopt, {}};
      for (auto const& w : normal_generators_b4(o.n)) {
        std::ostringstream s;
        s << w;
        bool const trivial = elem_from_word(w, RingTag::Z2()).is_identity();
        bool const level   = in_level(w, 4);
        r.add(s.str(), trivial && level,
              {{"identity_in_Z", trivial}, {"level_4", level}});
      }
      return r;
    }

    inline VerificationReport verify_figures(Options const& o) {
      check_degree(o.n, 2, 8);
      VerificationReport r{"figures", o.n, std::nullopt, {}};
      for (auto const& c : figure_cases(o.n)) {
        auto        got = winding_vector(c.word);
        std::string id  = c.claim;
        for (size_t k = 0; k < c.indices.size(); ++k) {
          id += (k == 0 ? " (" : ",") + std::to_string(c.indices[k]);
        }
        id += c.indices.empty() ? "" : ")";
        r.add(id, got == c.expected,
              {{"expected", c.expected.to_json()}, {"got", got.to_json()}});
      }
      return r;
    }

    ////////////////////////////////////////////////////////////////////////
    // compute and friends
    ////////////////////////////////////////////////////////////////////////

    inline int print_result(std::string const& command,
                            Options const&     o,
                            json const&        result,
                            std::ostream&      out) {
      out << (result.is_string() ? result.get<std::string>() : result.dump())
          << "\n";
      write_json(o.json_path, result_document(command, o, result));
      return exit_ok;
    }

    inline int coset_enum(Options const& o, std::ostream& out) {
      if (o.pres.empty() == o.builtin.empty()) {
        throw InvalidArgument("give exactly one of --pres and --builtin");
      }
      Presentation p;
      std::string  source;
      if (!o.pres.empty()) {
        std::ifstream f(o.pres);
        if (!f) {
          throw InvalidArgument("cannot read '" + o.pres + "'");
        }
        std::stringstream s;
        s << f.rdbuf();
        p      = parse_presentation(s.str());
        source = o.pres;
      } else {
        check_degree(o.n, 1, 8);
        p      = builtin_presentation(o.builtin, o.n, o.t);
        source = o.builtin;
      }
      auto const limit    = o.limit ? *o.limit : coset_limit_from_env();
      auto const strategy = parse_strategy(o.strategy);
      auto const res      = todd_coxeter(p, limit, strategy);

      VerificationReport r{"coset-enum", o.n, std::nullopt, {}};
      json               d{{"source", source},
                           {"generators", p.generator_count()},
                           {"relators", p.relators().size()},
                           {"strategy", strategy_name(strategy)},
                           {"limit", limit},
                           {"defined", res.defined},
                           {"max_live", res.max_live}};
      if (res.order) {
        d["order"] = *res.order;
        out << *res.order << "\n";
      } else {
        d["order"] = nullptr;
        out << "aborted: coset limit " << limit << " reached\n";
      }
      r.add("complete", res.order.has_value(), d);
      write_json(o.json_path, r.to_json());
      return r.ok() ? exit_ok : exit_fail;
    }

  }  // namespace detail

  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    using namespace detail;
    Options o;

    CLI::App app{"Computations in the mod 4 braid group Z_n and in G_n", "modbraid"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    std::function<int()> action;

    auto common = [&](CLI::App* c, bool needs_n = true) {
      auto* opt = c->add_option("--n", o.n, "degree (number of strands)");
      if (needs_n) {
        opt->required();
      }
      c->add_option("--json", o.json_path, "write a JSON report to this path");
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    auto add_verify = [&](char const*                                name,
                          char const*                                help,
                          std::function<VerificationReport(Options const&)> f) {
      auto* c = verify->add_subcommand(name, help);
      common(c);
      c->add_flag("--verbose", o.verbose, "list passing cases too");
      c->callback([&, f] { action = [&, f] { return finish(f(o), o, out); }; });
      return c;
    };
    auto* vt = add_verify("tables", "relation tables of G_n, G_n^t and Z_n",
                          verify_tables);
    vt->add_option("--t", o.t, "scale for G_n^t");
    vt->add_option("--table", o.table, "G, Gt, Z or all");
    add_verify("cocycle", "associativity and normalization of the cocycle",
               verify_cocycle);
    add_verify("chainmap", "the chain map into the bar resolution",
               [](Options const& x) {
                 check_degree(x.n, 2, 6);
                 return check_chain_map(x.n);
               });
    add_verify("closed-forms", "phi, kappa and eta of phi on every cell",
               verify_closed_forms);
    add_verify("split", "the splitting of G_n^t for even t", verify_split)
        ->add_option("--t", o.t, "scale, must be even")
        ->required();
    add_verify("nonsplit", "exhaustive search for a splitting of Z_n",
               verify_nonsplit);
    add_verify("b4-generators", "normal generators of B_n[4]",
               verify_b4_generators);
    add_verify("figures", "winding-number claims", verify_figures);

    auto* compute = app.add_subcommand("compute", "compute a single value");
    compute->require_subcommand(1);
    for (char const* which : {"phi", "kappa"}) {
      auto* c = compute->add_subcommand(which, std::string("the cocycle ")
                                                   + which + " on a 2-cell");
      common(c);
      c->add_option("--cell", o.cell, "c:i,j  d:i,j,k,l  e:i,k,j")->required();
      std::string const w = which;
      c->callback([&, w] {
        action = [&, w] {
          check_degree(o.n, 2, 12);
          auto const cell = parse_cell(o.cell);
          auto const v = w == "phi" ? phi(cell, o.n) : kappa(cell, o.n);
          return print_result("compute " + w, o, v.to_json(), out);
        };
      });
    }
    {
      auto* c = compute->add_subcommand("cocycle", "the bar cocycle c(p,q)");
      common(c);
      c->add_option("--p", o.p, "permutation, e.g. [2,1,3]")->required();
      c->add_option("--q", o.q, "permutation")->required();
      c->add_option("--ring", o.ring, "Z or Z2");
      c->add_option("--t", o.t, "scale for ring Z");
      c->callback([&] {
        action = [&] {
          check_degree(o.n, 1, 12);
          auto const p = parse_permutation(o.p);
          auto const q = parse_permutation(o.q);
          if (p.degree() != o.n || q.degree() != o.n) {
            throw InvalidArgument("permutations must have degree --n");
          }
          auto const v = bar_cocycle(p, q, ring_of(o.ring, o.t));
          return print_result("compute cocycle", o, v.to_json(), out);
        };
      });
    }
    {
      auto* c = compute->add_subcommand("burau", "Burau matrix at t = -1");
      common(c);
      c->add_option("--word", o.word, "braid word, e.g. \"b1 b2^-1 B(1,3)\"")
          ->required();
      c->add_option("--mod", o.mod, "modulus, 0 for none");
      c->callback([&] {
        action = [&] {
          check_degree(o.n, 1, 64);
          auto const M = burau_matrix(parse_braid_word(o.word, o.n), o.mod);
          json       j = M.to_json();
          j["identity"] = M.is_identity();
          return print_result("compute burau", o, j, out);
        };
      });
    }

    {
      auto* c = app.add_subcommand("coset-enum", "Todd-Coxeter enumeration");
      common(c, false);
      c->add_option("--pres", o.pres, "presentation file");
      c->add_option("--builtin", o.builtin,
                    "builtin presentation: "
                        + [] {
                            std::string s;
                            for (auto const& x : builtin_presentation_names()) {
                              s += (s.empty() ? "" : ", ") + x;
                            }
                            return s;
                          }());
      c->add_option("--t", o.t, "scale for table-Gt");
      c->add_option("--limit", o.limit,
                    "coset limit (default MODBRAID_COSET_LIMIT or 1000000)");
      c->add_option("--strategy", o.strategy, "hlt or felsch");
      c->callback([&] { action = [&] { return coset_enum(o, out); }; });
    }

    {
      auto* e = app.add_subcommand("enumerate", "enumerate a group");
      e->require_subcommand(1);
      auto* c = e->add_subcommand("zn", "order of Z_n by closure");
      common(c);
      c->callback([&] {
        action = [&] {
          return print_result("enumerate zn", o, enumerate_Zn(o.n), out);
        };
      });
    }

    {
      auto* b = app.add_subcommand("bound", "bounds");
      b->require_subcommand(1);
      auto* c = b->add_subcommand("schreier",
                                  "rank bound for B_n[4] as a subgroup");
      common(c);
      c->callback([&] {
        action = [&] {
          auto const v = schreier_bound(o.n).str();
          out << v << "\n";
          write_json(o.json_path, result_document("bound schreier", o, v));
          return exit_ok;
        };
      });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::CallForVersion const&) {
      out << version << "\n";
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    try {
      return action ? action() : exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
  }

}  // namespace modbraid::cli

#endif  // MODBRAID_TOOLS_CLI_APP_HPP_
