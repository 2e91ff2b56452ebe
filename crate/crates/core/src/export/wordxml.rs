//! Flat (single-file) word-processing XML package.

use std::io::{self, Write};
use std::path::Path;

use quick_xml::events::{BytesDecl, BytesEnd, BytesPI, BytesStart, BytesText, Event};
use quick_xml::Writer;

use super::{Block, Document, Run};

const PKG_NS: &str = "http://schemas.microsoft.com/office/2006/xmlPackage";
const REL_NS: &str = "http://schemas.openxmlformats.org/package/2006/relationships";
const W_NS: &str = "http://schemas.openxmlformats.org/wordprocessingml/2006/main";
const OFFICE_DOCUMENT_REL: &str = "http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument";
const RELS_TYPE: &str = "application/vnd.openxmlformats-package.relationships+xml";
const DOCUMENT_TYPE: &str = "application/vnd.openxmlformats-officedocument.wordprocessingml.document.main+xml";

/// Left indentation per depth level, in twentieths of a point.
const INDENT_STEP: usize = 360;

type XmlWriter<W> = Writer<W>;

fn emit<W: Write>(w: &mut XmlWriter<W>, event: Event<'_>) -> io::Result<()> {
    w.write_event(event).map_err(io::Error::other)
}

fn start<W: Write>(w: &mut XmlWriter<W>, name: &str, attrs: &[(&str, &str)]) -> io::Result<()> {
    let mut el = BytesStart::new(name);
    for attr in attrs {
        el.push_attribute(*attr);
    }
    emit(w, Event::Start(el))
}

fn empty<W: Write>(w: &mut XmlWriter<W>, name: &str, attrs: &[(&str, &str)]) -> io::Result<()> {
    let mut el = BytesStart::new(name);
    for attr in attrs {
        el.push_attribute(*attr);
    }
    emit(w, Event::Empty(el))
}

fn end<W: Write>(w: &mut XmlWriter<W>, name: &str) -> io::Result<()> {
    emit(w, Event::End(BytesEnd::new(name)))
}

fn write_run<W: Write>(w: &mut XmlWriter<W>, run: &Run) -> io::Result<()> {
    start(w, "w:r", &[])?;
    if run.style.bold_italic || run.style.superscript {
        start(w, "w:rPr", &[])?;
        if run.style.bold_italic {
            empty(w, "w:b", &[])?;
            empty(w, "w:i", &[])?;
        }
        if run.style.superscript {
            empty(w, "w:vertAlign", &[("w:val", "superscript")])?;
        }
        end(w, "w:rPr")?;
    }
    start(w, "w:t", &[("xml:space", "preserve")])?;
    emit(w, Event::Text(BytesText::new(&run.text)))?;
    end(w, "w:t")?;
    end(w, "w:r")
}

fn write_paragraph<W: Write>(w: &mut XmlWriter<W>, block: &Block) -> io::Result<()> {
    start(w, "w:p", &[])?;
    start(w, "w:pPr", &[])?;
    let indent = (block.depth * INDENT_STEP).to_string();
    empty(w, "w:ind", &[("w:left", &indent)])?;
    end(w, "w:pPr")?;
    for run in &block.runs {
        write_run(w, run)?;
    }
    end(w, "w:p")
}

fn write_package<W: Write>(doc: &Document, out: W) -> io::Result<()> {
    let mut w = Writer::new(out);
    emit(&mut w, Event::Decl(BytesDecl::new("1.0", Some("UTF-8"), Some("yes"))))?;
    emit(&mut w, Event::PI(BytesPI::new(r#"mso-application progid="Word.Document""#)))?;
    start(&mut w, "pkg:package", &[("xmlns:pkg", PKG_NS)])?;

    start(&mut w, "pkg:part", &[("pkg:name", "/_rels/.rels"), ("pkg:contentType", RELS_TYPE)])?;
    start(&mut w, "pkg:xmlData", &[])?;
    start(&mut w, "Relationships", &[("xmlns", REL_NS)])?;
    empty(
        &mut w,
        "Relationship",
        &[("Id", "rId1"), ("Type", OFFICE_DOCUMENT_REL), ("Target", "word/document.xml")],
    )?;
    end(&mut w, "Relationships")?;
    end(&mut w, "pkg:xmlData")?;
    end(&mut w, "pkg:part")?;

    start(
        &mut w,
        "pkg:part",
        &[("pkg:name", "/word/document.xml"), ("pkg:contentType", DOCUMENT_TYPE)],
    )?;
    start(&mut w, "pkg:xmlData", &[])?;
    start(&mut w, "w:document", &[("xmlns:w", W_NS)])?;
    start(&mut w, "w:body", &[])?;
    for block in &doc.blocks {
        write_paragraph(&mut w, block)?;
    }
    empty(&mut w, "w:sectPr", &[])?;
    end(&mut w, "w:body")?;
    end(&mut w, "w:document")?;
    end(&mut w, "pkg:xmlData")?;
    end(&mut w, "pkg:part")?;

    end(&mut w, "pkg:package")?;
    w.into_inner().write_all(b"\n")
}

pub fn serialize_wordxml(doc: &Document) -> Vec<u8> {
    let mut out = Vec::new();
    write_package(doc, &mut out).expect("writing to memory cannot fail");
    out
}

pub fn write_wordxml(doc: &Document, path: &Path) -> io::Result<()> {
    let file = std::fs::File::create(path)?;
    let mut buffered = io::BufWriter::new(file);
    write_package(doc, &mut buffered)?;
    buffered.flush()
}
