#ifndef WEYL_REPORT_HPP
#define WEYL_REPORT_HPP

#include <string>
#include <vector>

namespace weyl {

// One violated law together with the witnessing element ids.
struct Witness {
  std::string law;
  std::vector<int> elems;
  std::string note;
};

struct Report {
  bool ok = true;
  std::vector<Witness> violations;

  void fail(std::string law, std::vector<int> elems, std::string note = "") {
    ok = false;
    violations.push_back({std::move(law), std::move(elems), std::move(note)});
  }
  void merge(const Report& o) {
    ok = ok && o.ok;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
  std::string to_string() const {
    if (ok) return "ok";
    std::string s;
    for (const auto& w : violations) {
      s += w.law + " [";
      for (std::size_t i = 0; i < w.elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.elems[i]);
      }
      s += "]";
      if (!w.note.empty()) s += " " + w.note;
      s += "\n";
    }
    return s;
  }
};

}  // namespace weyl

#endif
