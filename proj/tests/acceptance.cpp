// One PASS/FAIL line per acceptance criterion. With arguments, only the named
// criteria run (e.g. `acceptance 9a 10`).

#include <iostream>
#include <string>
#include <vector>

#include "entrate/verification.hpp"

int main(int argc, char** argv) {
  entrate::VerifyOptions opt;
  for (int i = 1; i < argc; ++i) opt.only.emplace_back(argv[i]);
  for (const std::string& id : opt.only) {
    bool known = false;
    for (const std::string& k : entrate::check_ids()) known = known || k == id;
    if (!known) {
      std::cerr << "unknown criterion '" << id << "'\n";
      return 2;
    }
  }
  const auto results = entrate::run_verification(opt);
  entrate::write_report_text(results, std::cout);
  return entrate::all_passed(results) ? 0 : 1;
}
