// Copyright 2026 The qsvbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qsv {

/// Fixed set of workers that execute one indexed job at a time. Job slot 0
/// always runs on the calling thread; run() returns once every slot is done.
class WorkerPool {
  public:
    explicit WorkerPool(unsigned workers) : workers_(workers == 0 ? 1 : workers) {
        threads_.reserve(workers_ - 1);
        for (unsigned slot = 1; slot < workers_; ++slot) {
            threads_.emplace_back([this, slot] { loop(slot); });
        }
    }

    WorkerPool(const WorkerPool &) = delete;
    WorkerPool &operator=(const WorkerPool &) = delete;

    ~WorkerPool() {
        {
            std::lock_guard lock(mutex_);
            stopping_ = true;
        }
        wake_.notify_all();
        for (auto &t : threads_) {
            t.join();
        }
    }

    unsigned size() const noexcept { return workers_; }

    void run(const std::function<void(unsigned)> &job) {
        if (workers_ == 1) {
            job(0);
            return;
        }
        {
            std::lock_guard lock(mutex_);
            job_ = &job;
            pending_ = workers_ - 1;
            ++generation_;
        }
        wake_.notify_all();
        job(0);
        std::unique_lock lock(mutex_);
        done_.wait(lock, [this] { return pending_ == 0; });
        job_ = nullptr;
    }

    /// Splits [0, count) into size() contiguous ranges and calls
    /// body(begin, end) for each. Small ranges run inline.
    template <class Body>
    void parallel_for(std::uint64_t count, std::uint64_t min_per_worker, Body &&body) {
        if (workers_ == 1 || count < min_per_worker * workers_) {
            body(std::uint64_t{0}, count);
            return;
        }
        const std::uint64_t w = workers_;
        run([&](unsigned slot) {
            const std::uint64_t begin = count * slot / w;
            const std::uint64_t end = count * (slot + 1) / w;
            body(begin, end);
        });
    }

  private:
    void loop(unsigned slot) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(unsigned)> *job = nullptr;
            {
                std::unique_lock lock(mutex_);
                wake_.wait(lock, [&] { return stopping_ || generation_ != seen; });
                if (stopping_) {
                    return;
                }
                seen = generation_;
                job = job_;
            }
            (*job)(slot);
            {
                std::lock_guard lock(mutex_);
                --pending_;
            }
            done_.notify_one();
        }
    }

    unsigned workers_;
    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const std::function<void(unsigned)> *job_ = nullptr;
    unsigned pending_ = 0;
    std::uint64_t generation_ = 0;
    bool stopping_ = false;
};

} // namespace qsv
