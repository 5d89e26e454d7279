import init, {
  sampleLexicon, sampleGazetteer, sampleResumes, parseResume, rank, scoreDescription,
} from "./pkg/talentgraph_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, text) {
  const e = document.createElement(tag);
  if (text !== undefined) e.textContent = text;
  return e;
}

function table(headers, rows) {
  const t = el("table");
  const head = el("tr");
  headers.forEach((h) => head.appendChild(el("th", h)));
  t.appendChild(head);
  rows.forEach((r) => {
    const tr = el("tr");
    r.forEach((c) => {
      const td = el("td");
      if (c instanceof Node) td.appendChild(c); else td.textContent = c;
      tr.appendChild(td);
    });
    t.appendChild(tr);
  });
  return t;
}

function guarded(errorId, fn) {
  return () => {
    $(errorId).textContent = "";
    try { fn(); } catch (e) { $(errorId).textContent = String(e); }
  };
}

let resumes = [];

function runRank() {
  const out = JSON.parse(rank(JSON.stringify({
    resumes,
    query: $("query").value,
    lexicon: $("lexicon").value,
    gazetteer: $("gazetteer").value,
    lambda: Number($("lambda").value),
    cap: Number($("cap").value),
  })));
  const target = $("rank-out");
  target.replaceChildren();
  if (out.results.length === 0) {
    target.appendChild(el("p", "No candidate satisfies every term."));
    return;
  }
  const rows = out.results.map((r, i) => {
    const ex = out.explanations[i];
    const breakdown = el("div");
    ex.terms.forEach((t) => {
      const projects = t.projects.map((p) => `${p.title || p.project} @ ${p.organization} (${p.score.toFixed(3)}, ${p.duration_months} mo)`);
      breakdown.appendChild(el("div",
        `${t.term.skill}: mean ${t.sentiment_mean.toFixed(3)} + bonus ${t.duration_bonus.toFixed(3)}, ` +
        `${t.years.toFixed(1)} years` + (projects.length ? ` from ${projects.join("; ")}` : "")));
    });
    return [String(i + 1), r.name, r.jobseeker_id, r.total_score.toFixed(4), breakdown];
  });
  target.appendChild(table(["#", "Name", "Id", "Score", "Why"], rows));
}

function runScore() {
  const out = JSON.parse(scoreDescription($("details").value, $("lexicon").value, $("gazetteer").value));
  const target = $("score-out");
  target.replaceChildren();
  target.appendChild(el("p",
    `Score ${out.weight.toFixed(4)} from ${out.matched_occurrences} matched words; skills: ${out.skills.join(", ") || "none"}`));
  if (out.words.length) {
    target.appendChild(table(["Keyword", "Weight", "Occurrences"],
      out.words.map((w) => [w.word, w.weight.toFixed(2), String(w.occurrences)])));
  }
}

function runParse() {
  $("parse-out").textContent = JSON.stringify(JSON.parse(parseResume($("resume").value, $("lexicon").value)), null, 2);
}

async function main() {
  await init();
  $("lexicon").value = sampleLexicon();
  $("gazetteer").value = sampleGazetteer();
  resumes = JSON.parse(sampleResumes());
  resumes.forEach((text, i) => {
    const o = el("option", text.split("\n")[0]);
    o.value = String(i);
    $("sample").appendChild(o);
  });
  $("resume").value = resumes[0];
  $("sample").addEventListener("change", () => { $("resume").value = resumes[Number($("sample").value)]; });
  $("rank").addEventListener("click", guarded("rank-error", runRank));
  $("score").addEventListener("click", guarded("score-error", runScore));
  $("parse").addEventListener("click", guarded("parse-error", runParse));
  document.querySelectorAll("a[data-q]").forEach((a) => a.addEventListener("click", (e) => {
    e.preventDefault();
    $("query").value = a.dataset.q;
    guarded("rank-error", runRank)();
  }));
  guarded("rank-error", runRank)();
}

main();
