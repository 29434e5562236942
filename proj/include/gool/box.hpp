#pragma once

#include <memory>
#include <utility>

namespace gool {

/// Immutable, shared, never-null heap cell used to give recursive IR nodes
/// value semantics. Equality is structural.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

    const T& get() const noexcept { return *ptr_; }
    const T& operator*() const noexcept { return *ptr_; }
    const T* operator->() const noexcept { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) {
        return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
    }

private:
    std::shared_ptr<const T> ptr_;
};

} // namespace gool
