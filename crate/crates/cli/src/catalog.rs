//! Named structures available through `corpus`.

use std::sync::Arc;

use sysalg::corpus::{boolean_identity_negation, entries, make_boolean, symmetrize};
use sysalg::morita::{row_column_context, trivial_context};
use sysalg::{Loaded, Structure};

pub struct Item {
    pub name: String,
    pub description: String,
    pub build: Box<dyn Fn() -> Structure>,
}

pub fn catalog() -> Vec<Item> {
    let mut items: Vec<Item> = entries()
        .into_iter()
        .map(|e| {
            let system = e.system;
            Item { name: e.name, description: e.provenance, build: Box::new(move || Structure::System(system.clone())) }
        })
        .collect();
    items.push(Item {
        name: "boolean".into(),
        description: "Boolean semiring, as a raw semiring".into(),
        build: Box::new(|| Structure::Semiring(make_boolean())),
    });
    items.push(Item {
        name: "boolean-identity-negation".into(),
        description: "Boolean semiring with the identity negation (not a triple)".into(),
        build: Box::new(|| Structure::Triple(boolean_identity_negation())),
    });
    items.push(Item {
        name: "trivial-context".into(),
        description: "context (A, A, A, A, ·, ·) over the symmetrized Boolean".into(),
        build: Box::new(|| Structure::Context(trivial_context(&Arc::new(symmetrize(&make_boolean()))))),
    });
    items.push(Item {
        name: "row-column-context".into(),
        description: "rows and columns of length 2 between A and Mat2(A), symmetrized Boolean".into(),
        build: Box::new(|| Structure::Context(row_column_context(&Arc::new(symmetrize(&make_boolean()))))),
    });
    items
}

pub fn lookup(name: &str) -> Option<Loaded> {
    catalog()
        .into_iter()
        .find(|i| i.name == name)
        .map(|i| Loaded { name: i.name.clone(), structure: (i.build)() })
}
