use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rules::fixed_arity;

/// Noun hypernym graph stored as child -> direct parents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TaxonomyStore {
    parents: BTreeMap<String, BTreeSet<String>>,
    children: BTreeMap<String, BTreeSet<String>>,
}

impl TaxonomyStore {
    pub fn parse(source: &str, text: &str) -> Result<Self> {
        let edges = fixed_arity(source, text, 2)?
            .into_iter()
            .map(|(_, f)| (f[0], f[1]));
        Self::from_edges(edges)
    }

    /// Builds the store, rejecting self-loops and cycles.
    pub fn from_edges<'a, I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut store = TaxonomyStore::default();
        for (child, parent) in edges {
            let (child, parent) = (child.to_lowercase(), parent.to_lowercase());
            if child == parent {
                return Err(Error::Config(format!("taxonomy self-loop on {child:?}")));
            }
            store
                .children
                .entry(parent.clone())
                .or_default()
                .insert(child.clone());
            store.parents.entry(child).or_default().insert(parent);
        }
        if let Some(node) = store.find_cycle() {
            return Err(Error::Config(format!("taxonomy cycle through {node:?}")));
        }
        Ok(store)
    }

    fn find_cycle(&self) -> Option<String> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Active,
            Done,
        }
        let mut marks: BTreeMap<&str, Mark> = BTreeMap::new();
        for root in self.parents.keys() {
            if marks.contains_key(root.as_str()) {
                continue;
            }
            // iterative DFS: (node, parents not yet visited)
            let mut stack: Vec<(&str, Vec<&str>)> = vec![(root, self.parents_of(root))];
            marks.insert(root, Mark::Active);
            while let Some(top) = stack.last_mut() {
                match top.1.pop() {
                    Some(next) => match marks.get(next) {
                        Some(Mark::Active) => return Some(next.to_string()),
                        Some(Mark::Done) => {}
                        None => {
                            marks.insert(next, Mark::Active);
                            stack.push((next, self.parents_of(next)));
                        }
                    },
                    None => {
                        let (node, _) = stack.pop().expect("non-empty stack");
                        marks.insert(node, Mark::Done);
                    }
                }
            }
        }
        None
    }

    fn parents_of(&self, node: &str) -> Vec<&str> {
        self.parents
            .get(node)
            .map(|s| s.iter().map(String::as_str).collect())
            .unwrap_or_default()
    }

    pub fn parents(&self, noun: &str) -> BTreeSet<String> {
        self.parents.get(&noun.to_lowercase()).cloned().unwrap_or_default()
    }

    /// All nouns mentioned in the store.
    pub fn nouns(&self) -> BTreeSet<&str> {
        self.parents
            .keys()
            .chain(self.children.keys())
            .map(String::as_str)
            .collect()
    }

    fn closure(map: &BTreeMap<String, BTreeSet<String>>, start: &str) -> BTreeSet<String> {
        let mut seen = BTreeSet::new();
        let mut frontier = vec![start.to_string()];
        while let Some(node) = frontier.pop() {
            if let Some(next) = map.get(&node) {
                for n in next {
                    if seen.insert(n.clone()) {
                        frontier.push(n.clone());
                    }
                }
            }
        }
        seen
    }

    /// Every transitive hypernym of `noun`.
    pub fn ancestors(&self, noun: &str) -> BTreeSet<String> {
        Self::closure(&self.parents, &noun.to_lowercase())
    }

    /// Every transitive hyponym of `noun`.
    pub fn descendants(&self, noun: &str) -> BTreeSet<String> {
        Self::closure(&self.children, &noun.to_lowercase())
    }

    pub fn is_hyponym(&self, a: &str, b: &str) -> bool {
        let (a, b) = (a.to_lowercase(), b.to_lowercase());
        a != b && self.ancestors(&a).contains(&b)
    }

    pub fn shared_hyponyms(&self, a: &str, b: &str) -> BTreeSet<String> {
        let da = self.descendants(a);
        let db = self.descendants(b);
        da.intersection(&db).cloned().collect()
    }

    pub fn shared_hypernyms(&self, a: &str, b: &str) -> BTreeSet<String> {
        let aa = self.ancestors(a);
        let ab = self.ancestors(b);
        aa.intersection(&ab).cloned().collect()
    }
}
