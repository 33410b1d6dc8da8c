use std::collections::BTreeMap;

use serde::Serialize;

use crate::ring::{RingElement, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociateClass {
    pub representative: RingElement,
    /// Lexicographically ordered.
    pub members: Vec<RingElement>,
}

/// The vertices of a ring partitioned by the principal ideal they generate.
///
/// Classes are ordered by their smallest member. In a von Neumann regular ring
/// each class contains exactly one idempotent, which is used as representative;
/// after splitting into fields these are the `{0,1}`-patterns. Otherwise the
/// smallest member represents the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociateClasses {
    classes: Vec<AssociateClass>,
    index: BTreeMap<RingElement, usize>,
}

impl AssociateClasses {
    pub(crate) fn new(spec: &RingSpec) -> Self {
        let regular = spec.is_von_neumann_regular();
        let mut by_signature: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut classes: Vec<AssociateClass> = Vec::new();
        let mut index = BTreeMap::new();
        for v in spec.vertices() {
            let id = *by_signature
                .entry(spec.ideal_signature(&v))
                .or_insert_with(|| {
                    classes.push(AssociateClass {
                        representative: v.clone(),
                        members: Vec::new(),
                    });
                    classes.len() - 1
                });
            index.insert(v.clone(), id);
            classes[id].members.push(v);
        }
        if regular {
            for class in &mut classes {
                let mut idempotents = class.members.iter().filter(|m| spec.is_idempotent(m));
                class.representative = idempotents
                    .next()
                    .expect("every principal ideal of a regular ring has an idempotent generator")
                    .clone();
                debug_assert!(idempotents.next().is_none());
            }
        }
        AssociateClasses { classes, index }
    }

    pub fn classes(&self) -> &[AssociateClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class id of a vertex, `None` for zero and units.
    pub fn class_of(&self, a: &RingElement) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &RingElement> {
        self.classes.iter().map(|c| &c.representative)
    }
}
