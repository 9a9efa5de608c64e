#include "monli/category.hpp"

#include <algorithm>
#include <cctype>

#include "monli/error.hpp"

namespace monli {

namespace {

bool feature_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CategoryPtr run() {
    CategoryPtr cat = category();
    if (pos_ != text_.size()) fail("trailing input");
    return cat;
  }

 private:
  // category := item (slash item)*, folding left: S\NP/NP == (S\NP)/NP
  CategoryPtr category() {
    CategoryPtr left = item();
    while (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '\\')) {
      Slash s = text_[pos_] == '/' ? Slash::forward : Slash::backward;
      ++pos_;
      left = Category::functional(std::move(left), s, item());
    }
    return left;
  }

  CategoryPtr item() {
    if (pos_ >= text_.size()) fail("expected category");
    if (text_[pos_] == '(') {
      ++pos_;
      CategoryPtr inner = category();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    return atom();
  }

  CategoryPtr atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected atomic category");
    std::string name(text_.substr(start, pos_ - start));
    const auto& names = Category::atom_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      pos_ = start;
      fail("unknown atomic name '" + name + "'");
    }
    std::string feature;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      std::size_t fstart = pos_;
      while (pos_ < text_.size() && feature_char(text_[pos_])) ++pos_;
      if (pos_ == fstart) fail("empty feature");
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      feature.assign(text_.substr(fstart, pos_ - fstart));
      ++pos_;
    }
    return Category::atomic(std::move(name), std::move(feature));
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error("category parse error at offset " + std::to_string(pos_) + ": " + why +
                " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CategoryPtr Category::atomic(std::string name, std::string feature) {
  auto cat = std::shared_ptr<Category>(new Category());
  cat->atomic_ = true;
  cat->name_ = std::move(name);
  cat->feature_ = std::move(feature);
  return cat;
}

CategoryPtr Category::functional(CategoryPtr result, Slash slash, CategoryPtr argument) {
  auto cat = std::shared_ptr<Category>(new Category());
  cat->atomic_ = false;
  cat->result_ = std::move(result);
  cat->slash_ = slash;
  cat->argument_ = std::move(argument);
  return cat;
}

CategoryPtr Category::parse(std::string_view text) { return Parser(text).run(); }

const std::vector<std::string>& Category::atom_names() {
  static const std::vector<std::string> names = {"S", "NP", "N", "PP"};
  return names;
}

bool Category::is_modifier_shape() const {
  return !atomic_ && result_->equals(*argument_);
}

std::string Category::to_string() const {
  if (atomic_) {
    if (feature_.empty()) return name_;
    return name_ + "[" + feature_ + "]";
  }
  auto wrap = [](const CategoryPtr& c) {
    std::string s = c->to_string();
    return c->is_functional() ? "(" + s + ")" : s;
  };
  return wrap(result_) + (slash_ == Slash::forward ? "/" : "\\") + wrap(argument_);
}

bool Category::equals(const Category& other) const {
  if (atomic_ != other.atomic_) return false;
  if (atomic_) return name_ == other.name_ && feature_ == other.feature_;
  return slash_ == other.slash_ && result_->equals(*other.result_) &&
         argument_->equals(*other.argument_);
}

}  // namespace monli
