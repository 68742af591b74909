// DOM rendering. Every tally shown comes from the last server response.

import type { ExpertRow, PersonDetail, Suggestion } from "./api";

export function clear(el: HTMLElement): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function renderMessage(el: HTMLElement, text: string): void {
  clear(el);
  const p = document.createElement("p");
  p.className = "guidance";
  p.textContent = text;
  el.appendChild(p);
}

export function renderBanner(el: HTMLElement, text: string | null): void {
  clear(el);
  if (text === null) return;
  const div = document.createElement("div");
  div.className = "banner";
  div.setAttribute("role", "alert");
  div.textContent = text;
  el.appendChild(div);
}

export function renderSuggestions(
  el: HTMLElement,
  suggestions: Suggestion[],
  onSelect: (categoryId: string) => void,
): void {
  clear(el);
  if (!suggestions.length) return;
  const heading = document.createElement("h2");
  heading.textContent = "Content categories";
  el.appendChild(heading);
  const list = document.createElement("ul");
  list.className = "suggestions";
  for (const s of suggestions) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.className = "suggestion";
    button.dataset.categoryId = s.category_id;
    button.textContent = `${s.rank}. ${s.label}`;
    button.addEventListener("click", () => onSelect(s.category_id));
    item.appendChild(button);
    list.appendChild(item);
  }
  el.appendChild(list);
}

export interface ResultHandlers {
  onVote: (personId: string, delta: 1 | -1) => void;
  onOpenPerson: (personId: string) => void;
}

function voteButton(
  personId: string,
  delta: 1 | -1,
  handlers: ResultHandlers,
): HTMLButtonElement {
  const button = document.createElement("button");
  button.type = "button";
  button.className = delta === 1 ? "vote-up" : "vote-down";
  button.title = delta === 1 ? "vote for" : "vote against";
  button.textContent = delta === 1 ? "✓" : "✗";
  button.dataset.personId = personId;
  button.addEventListener("click", () => handlers.onVote(personId, delta));
  return button;
}

export function renderResults(
  el: HTMLElement,
  results: ExpertRow[],
  tallies: Map<string, number>,
  unavailable: Set<string>,
  handlers: ResultHandlers,
): void {
  clear(el);
  if (!results.length) {
    renderMessage(el, "No experts found for this category and filter.");
    return;
  }
  const heading = document.createElement("h2");
  heading.textContent = "Ranked experts";
  el.appendChild(heading);
  const list = document.createElement("ol");
  list.className = "results";
  for (const row of results) {
    const item = document.createElement("li");
    item.className = "result-row";
    item.dataset.personId = row.person_id;
    if (unavailable.has(row.person_id)) item.classList.add("unavailable");

    const link = document.createElement("a");
    link.href = "#";
    link.className = "person-link";
    link.textContent = row.name;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      handlers.onOpenPerson(row.person_id);
    });

    const status = document.createElement("span");
    status.className = "status";
    status.textContent = row.status;

    const badge = document.createElement("span");
    badge.className = "tally";
    const tally = tallies.get(row.person_id);
    badge.textContent = tally === undefined ? "" : String(tally);

    item.append(
      link,
      status,
      voteButton(row.person_id, 1, handlers),
      voteButton(row.person_id, -1, handlers),
      badge,
    );
    list.appendChild(item);
  }
  el.appendChild(list);
}

export function renderPerson(
  el: HTMLElement,
  detail: PersonDetail,
  onBack: () => void,
): void {
  clear(el);
  const back = document.createElement("button");
  back.type = "button";
  back.className = "back";
  back.textContent = "← back to results";
  back.addEventListener("click", onBack);

  const name = document.createElement("h2");
  name.textContent = detail.name;
  const status = document.createElement("p");
  status.className = "status";
  status.textContent = detail.status;

  const interests = document.createElement("p");
  interests.className = "interests";
  interests.textContent = detail.research_interests.length
    ? `Research interests: ${detail.research_interests.join(", ")}`
    : "No recorded research interests.";

  const pubsHeading = document.createElement("h3");
  pubsHeading.textContent = `Publications (${detail.publications.length})`;
  const pubs = document.createElement("ul");
  pubs.className = "publications";
  for (const p of detail.publications) {
    const item = document.createElement("li");
    const journal = p.journal ? `, ${p.journal}` : "";
    item.textContent = `${p.title}${journal} (${p.reader_count} readers)`;
    pubs.appendChild(item);
  }

  const tally = document.createElement("p");
  tally.className = "tally";
  tally.textContent = `Vote tally: ${detail.vote_tally}`;

  el.append(back, name, status, interests, tally, pubsHeading, pubs);
}
