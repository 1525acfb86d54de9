#ifndef DDL_CONFIG_HPP
#define DDL_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace ddl {

// Flat INI-style configuration: [section] headers, key = value lines,
// '#' comments. Keys are stored as "section.key" ("" section for top-level).
class Config {
  public:
    bool has(const std::string& key) const { return values_.count(key) > 0; }
    void set(const std::string& key, const std::string& value) {
        values_[key] = value;
    }

    std::string get(const std::string& key, const std::string& dflt = "") const;
    double get_double(const std::string& key, double dflt) const;
    int get_int(const std::string& key, int dflt) const;
    std::vector<double> get_list(const std::string& key,
                                 std::vector<double> dflt) const;

    const std::map<std::string, std::string>& values() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

// Throws std::runtime_error naming the offending line on parse errors.
Config load_config(const std::string& path);

// "section.key=value" override strings (CLI flags beat file values)
void apply_overrides(Config& cfg, const std::vector<std::string>& overrides);

}  // namespace ddl

#endif
