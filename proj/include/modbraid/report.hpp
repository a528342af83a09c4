#ifndef MODBRAID_REPORT_HPP_
#define MODBRAID_REPORT_HPP_

// Machine-readable results of the verification suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef MODBRAID_VERSION
#define MODBRAID_VERSION "0.1.0"
#endif

namespace modbraid {

  inline constexpr char const* version = MODBRAID_VERSION;

  // One instance of a relation, checked as an identity of group elements.
  struct RelationRow {
    std::string      relation;
    std::vector<int> indices;
    bool             pass = false;
    std::string      lhs;
    std::string      rhs;
    // Set when the checked form differs from the row as printed, or to carry
    // the evaluated sides of a failure.
    std::string note;
  };

  struct RelationReport {
    std::string              table;
    int                      n = 0;
    std::int64_t             t = 1;
    std::vector<RelationRow> rows;

    bool all_pass() const {
      for (auto const& r : rows) {
        if (!r.pass) {
          return false;
        }
      }
      return true;
    }

    size_t failures() const {
      size_t k = 0;
      for (auto const& r : rows) {
        k += r.pass ? 0 : 1;
      }
      return k;
    }

    nlohmann::ordered_json to_json() const {
      nlohmann::ordered_json j;
      j["table"] = table;
      j["n"]     = n;
      j["t"]     = t;
      auto rs    = nlohmann::ordered_json::array();
      for (auto const& r : rows) {
        nlohmann::ordered_json x;
        x["relation"] = r.relation;
        x["indices"]  = r.indices;
        x["pass"]     = r.pass;
        x["lhs"]      = r.lhs;
        x["rhs"]      = r.rhs;
        if (!r.note.empty()) {
          x["note"] = r.note;
        }
        rs.push_back(std::move(x));
      }
      j["rows"] = std::move(rs);
      return j;
    }
  };

  struct ReportCase {
    std::string            id;
    bool                   pass = false;
    nlohmann::ordered_json detail;
  };

  struct VerificationReport {
    std::string                 suite;
    int                         n = 0;
    std::optional<std::int64_t> t;
    std::vector<ReportCase>     cases;

    void add(std::string id, bool pass, nlohmann::ordered_json detail = {}) {
      cases.push_back({std::move(id), pass, std::move(detail)});
    }

    // Folds a relation report in, one case per row.
    void add(RelationReport const& r) {
      for (auto const& row : r.rows) {
        std::string id = r.table + " " + row.relation;
        for (size_t k = 0; k < row.indices.size(); ++k) {
          id += (k == 0 ? " (" : ",") + std::to_string(row.indices[k]);
        }
        if (!row.indices.empty()) {
          id += ")";
        }
        nlohmann::ordered_json d;
        d["lhs"] = row.lhs;
        d["rhs"] = row.rhs;
        if (!row.note.empty()) {
          d["note"] = row.note;
        }
        add(std::move(id), row.pass, std::move(d));
      }
    }

    size_t passed() const {
      size_t k = 0;
      for (auto const& c : cases) {
        k += c.pass ? 1 : 0;
      }
      return k;
    }

    size_t failed() const {
      return cases.size() - passed();
    }

    bool ok() const {
      return failed() == 0;
    }

    nlohmann::ordered_json to_json() const {
      nlohmann::ordered_json j;
      j["schema"]  = 1;
      j["version"] = version;
      j["suite"]   = suite;
      j["n"]       = n;
      if (t) {
        j["t"] = *t;
      } else {
        j["t"] = nullptr;
      }
      auto cs = nlohmann::ordered_json::array();
      for (auto const& c : cases) {
        nlohmann::ordered_json x;
        x["id"]   = c.id;
        x["pass"] = c.pass;
        if (!c.detail.is_null()) {
          x["detail"] = c.detail;
        }
        cs.push_back(std::move(x));
      }
      j["cases"]   = std::move(cs);
      j["summary"] = {{"total", cases.size()},
                      {"passed", passed()},
                      {"failed", failed()}};
      return j;
    }
  };

}  // namespace modbraid

#endif  // MODBRAID_REPORT_HPP_
