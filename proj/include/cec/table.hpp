#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>

namespace cec {

using Element = std::uint32_t;

// Contiguous element table with inline storage for short tables. Morphism
// tables in the exhaustive checks rarely exceed 16 entries, and the checks
// create hundreds of millions of them, so copies must not allocate.
class Table {
 public:
  static constexpr std::size_t kInline = 16;

  Table() = default;
  // Entries are left unspecified; callers fill every slot.
  explicit Table(std::size_t n) { resize_uninitialized(n); }
  Table(std::size_t n, Element value) {
    resize_uninitialized(n);
    std::fill_n(data(), n, value);
  }
  Table(std::initializer_list<Element> init) : Table(init.begin(), init.end()) {}
  template <class It>
  Table(It first, It last) {
    resize_uninitialized(static_cast<std::size_t>(std::distance(first, last)));
    std::copy(first, last, data());
  }

  Table(const Table& other) : Table(other.begin(), other.end()) {}
  Table(Table&& other) noexcept { take(std::move(other)); }
  Table& operator=(const Table& other) {
    if (this != &other) {
      resize_uninitialized(other.size_);
      std::copy(other.begin(), other.end(), data());
    }
    return *this;
  }
  Table& operator=(Table&& other) noexcept {
    if (this != &other) take(std::move(other));
    return *this;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Element* data() { return heap_ ? heap_.get() : inline_; }
  const Element* data() const { return heap_ ? heap_.get() : inline_; }
  Element& operator[](std::size_t i) { return data()[i]; }
  Element operator[](std::size_t i) const { return data()[i]; }
  Element* begin() { return data(); }
  Element* end() { return data() + size_; }
  const Element* begin() const { return data(); }
  const Element* end() const { return data() + size_; }
  Element front() const { return data()[0]; }
  Element back() const { return data()[size_ - 1]; }

  void push_back(Element e) {
    if (size_ == capacity()) grow(std::max<std::size_t>(2 * capacity(), kInline));
    data()[size_++] = e;
  }
  void pop_back() { --size_; }

  friend bool operator==(const Table& a, const Table& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

 private:
  std::size_t capacity() const { return heap_ ? heap_capacity_ : kInline; }

  void resize_uninitialized(std::size_t n) {
    if (n > capacity()) {
      heap_.reset(new Element[n]);
      heap_capacity_ = n;
    }
    size_ = n;
  }

  void grow(std::size_t cap) {
    std::unique_ptr<Element[]> fresh(new Element[cap]);
    std::copy(begin(), end(), fresh.get());
    heap_ = std::move(fresh);
    heap_capacity_ = cap;
  }

  void take(Table&& other) {
    size_ = other.size_;
    if (other.heap_) {
      heap_ = std::move(other.heap_);
      heap_capacity_ = other.heap_capacity_;
    } else {
      heap_.reset();
      std::copy(other.inline_, other.inline_ + size_, inline_);
    }
    other.size_ = 0;
  }

  std::size_t size_ = 0;
  std::size_t heap_capacity_ = 0;
  std::unique_ptr<Element[]> heap_;
  Element inline_[kInline];
};

}  // namespace cec
