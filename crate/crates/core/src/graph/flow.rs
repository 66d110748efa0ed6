//! Dense Edmonds–Karp for the small unit-capacity networks behind Menger cuts.

pub(crate) struct FlowNetwork {
    size: usize,
    cap: Vec<i32>,
}

impl FlowNetwork {
    pub fn new(size: usize) -> Self {
        FlowNetwork { size, cap: vec![0; size * size] }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i32) {
        self.cap[from * self.size + to] += capacity;
    }

    /// Maximum flow from `s` to `t`, stopping early once `limit` is reached.
    pub fn max_flow(mut self, s: usize, t: usize, limit: i32) -> i32 {
        let size = self.size;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; size];
        let mut queue = Vec::with_capacity(size);
        while flow < limit {
            parent.fill(usize::MAX);
            parent[s] = s;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() && parent[t] == usize::MAX {
                let u = queue[head];
                head += 1;
                for v in 0..size {
                    if parent[v] == usize::MAX && self.cap[u * size + v] > 0 {
                        parent[v] = u;
                        queue.push(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut bottleneck = i32::MAX;
            let mut v = t;
            while v != s {
                let u = parent[v];
                bottleneck = bottleneck.min(self.cap[u * size + v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u * size + v] -= bottleneck;
                self.cap[v * size + u] += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 1);
        net.add_arc(0, 2, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(2, 3, 1);
        net.add_arc(1, 2, 1);
        assert_eq!(net.max_flow(0, 3, i32::MAX), 2);
    }
}
