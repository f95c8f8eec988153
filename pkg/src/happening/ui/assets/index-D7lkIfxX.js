(function(){let e=document.createElement(`link`).relList;if(e&&e.supports&&e.supports(`modulepreload`))return;for(let e of document.querySelectorAll(`link[rel="modulepreload"]`))n(e);new MutationObserver(e=>{for(let t of e)if(t.type===`childList`)for(let e of t.addedNodes)e.tagName===`LINK`&&e.rel===`modulepreload`&&n(e)}).observe(document,{childList:!0,subtree:!0});function t(e){let t={};return e.integrity&&(t.integrity=e.integrity),e.referrerPolicy&&(t.referrerPolicy=e.referrerPolicy),t.credentials=e.crossOrigin===`use-credentials`?`include`:e.crossOrigin===`anonymous`?`omit`:`same-origin`,t}function n(e){if(e.ep)return;e.ep=!0;let n=t(e);fetch(e.href,n)}})();var e=class extends Error{body;constructor(e){super(e.message),this.body=e}},t=class{base;fetchImpl;constructor(e=``,t=(...e)=>fetch(...e)){this.base=e,this.fetchImpl=t}async request(t,n){let r=await this.fetchImpl(this.base+t,n);if(r.status===204)return;let i=await r.json();if(!r.ok)throw new e(i);return i}listMembers(){return this.request(`/api/members`)}createEvent(e){return this.request(`/api/events`,{method:`POST`,headers:{"content-type":`application/json`},body:JSON.stringify(e)})}getSummary(e,t,n){let r=new URLSearchParams({from:e,to:t,hide_stale:String(n)});return this.request(`/api/summary?${r}`)}getCatchup(e,t,n){let r=new URLSearchParams({member:e,since:t,hide_stale:String(n)});return this.request(`/api/catchup?${r}`)}};function n(e){let t=e=>String(e).padStart(2,`0`);return`${e.getFullYear()}-${t(e.getMonth()+1)}-${t(e.getDate())}`}function r(e,t){let r=new Date(e);return r.setDate(r.getDate()-t),n(r)}function i(e,t){let i=new URLSearchParams(e),a=i.get(`view`);return{member:i.get(`member`)??``,view:a===`track`||a===`catchup`?a:`summary`,from:i.get(`from`)??r(t,7),to:i.get(`to`)??n(t),hideStale:i.get(`hide_stale`)!==`false`,since:i.get(`since`)??r(t,7)}}function a(e){return`?${new URLSearchParams({view:e.view,member:e.member,from:e.from,to:e.to,hide_stale:String(e.hideStale),since:e.since})}`}function o(e){let t=e.trim().split(/\s+/).filter(Boolean);return t.length===0?`?`:t.length===1?t[0][0].toUpperCase():(t[0][0]+t[t.length-1][0]).toUpperCase()}function s(e){return`avatar-${e}`}function c(e,t){let n=document.createElement(`span`);return n.className=`avatar ${s(t)}`,n.textContent=o(e),n.title=e,n}var l=/^\d{4}-\d{2}-\d{2}$/,u={EmptyDescription:`Description must not be empty.`,DescriptionTooLong:`Description must be at most 280 characters.`,InvalidDescription:`Description contains unsupported control characters.`,InvalidPriority:`Priority must be 1, 2 or 3.`,InvalidDate:`Date must be a valid YYYY-MM-DD date.`,FutureEventDate:`The event date cannot be in the future.`};function d(e){for(let t of e){let e=t.codePointAt(0);if(e<32&&t!==`
`||e===127)return!0}return!1}function f(e){return e%4==0&&e%100!=0||e%400==0}var p=[31,28,31,30,31,30,31,31,30,31,30,31];function m(e){if(!l.test(e))return null;let[t,n,r]=e.split(`-`).map(Number);if(t<1||n<1||n>12)return null;let i=n===2&&f(t)?29:p[n-1];return r<1||r>i?null:e}function h(e,t,n,r){let i=[],a=typeof e==`string`?e.trim():``;return typeof e!=`string`||a===``?i.push(`EmptyDescription`):(a.length>280&&i.push(`DescriptionTooLong`),d(a)&&i.push(`InvalidDescription`)),(typeof t!=`number`||!Number.isInteger(t)||t<1||t>3)&&i.push(`InvalidPriority`),(typeof n==`string`?m(n):null)===null?i.push(`InvalidDate`):n!==void 0&&n>r&&i.push(`FutureEventDate`),i}var g={1:`low`,2:`normal`,3:`high`};function _(e,t,n){let r=document.createElement(e);return t&&(r.className=t),n!==void 0&&(r.textContent=n),r}function v(e){let t=_(`div`,`timeline`);if(e.days.length===0)return t.appendChild(_(`p`,`empty-state`,`No events in this period.`)),t;for(let n of e.days){let e=_(`section`,`day-group`);e.dataset.date=n.date,e.appendChild(_(`h3`,`day-heading`,n.date));let r=_(`ul`,`entries`);for(let e of n.entries){let t=_(`li`,`entry`);t.dataset.eventId=String(e.event.id),t.appendChild(c(e.author_name,e.weight));let n=_(`div`,`entry-body`);n.appendChild(_(`p`,`entry-description`,e.event.description));let i=_(`p`,`entry-meta`);i.textContent=`${e.author_name} · ${e.event.event_date}`,n.appendChild(i),t.appendChild(n),r.appendChild(t)}e.appendChild(r),t.appendChild(e)}return t}function y(e){let t=_(`form`,`entry-form`);t.noValidate=!0;let n=_(`textarea`);n.name=`description`,n.placeholder=`What happened?`,n.maxLength=300;let r=_(`select`);r.name=`priority`;for(let e of[1,2,3]){let t=_(`option`);t.value=String(e),t.textContent=`${e} (${g[e]})`,e===2&&(t.selected=!0),r.appendChild(t)}let i=_(`input`);i.type=`date`,i.name=`event_date`,i.value=e.today,i.max=e.today;let a=_(`ul`,`form-errors`),o=_(`p`,`network-banner`);o.hidden=!0;let s=_(`p`,`created-confirmation`);s.hidden=!0;let c=_(`button`,void 0,`Share`);return c.type=`submit`,t.append(n,r,i,a,o,s,c),t.addEventListener(`submit`,async t=>{t.preventDefault(),a.replaceChildren(),o.hidden=!0,s.hidden=!0;let c={description:n.value,priority:Number(r.value),event_date:i.value},l=h(c.description,c.priority,c.event_date,e.today);if(l.length>0){b(a,l);return}try{let t=await e.submit(c);n.value=``,s.textContent=`Shared: "${t.description}" (${t.event_date}, #${t.id})`,s.hidden=!1,e.onCreated?.(t)}catch(e){let t=e.body;t&&Array.isArray(t.details)?b(a,t.details):(o.textContent=`Could not reach the server. Your entry is kept; try again.`,o.hidden=!1)}}),t}function b(e,t){for(let n of t)e.appendChild(_(`li`,`form-error`,u[n]??n))}function x(e,t,n,r){let i=_(`div`,`catchup`);if(e.total_count===0?i.appendChild(_(`p`,`empty-state`,`Nothing happened since then.`)):i.appendChild(v(e)),t>0||n){let e=_(`button`,`toggle-hidden`);e.type=`button`,e.textContent=n?`Hide older items`:`Show hidden (${t} older item${t===1?``:`s`} hidden)`,e.addEventListener(`click`,r),i.appendChild(e)}return i}var S=`happening.member`;async function C(e,t,n){let r=i(t,n.today);r.member||=n.storage.getItem(S)??``,e.replaceChildren();let o=0,s=document.createElement(`header`),c=document.createElement(`h1`);c.textContent=`happening`,s.appendChild(c);let l=document.createElement(`select`);l.className=`member-select`;let u=document.createElement(`option`);u.value=``,u.textContent=`Who are you?`,l.appendChild(u),s.appendChild(l);let d=document.createElement(`nav`);for(let e of[`track`,`summary`,`catchup`]){let t=document.createElement(`a`);t.textContent=e===`catchup`?`what did I miss?`:e,t.href=a({...r,view:e}),t.className=e===r.view?`active`:``,t.addEventListener(`click`,t=>{t.preventDefault(),p({...r,view:e})}),d.appendChild(t)}s.appendChild(d);let f=document.createElement(`main`);e.append(s,f);function p(t){let r=a(t);n.onNavigate?.(r),C(e,r,n)}try{let e=await n.api.listMembers();for(let t of e){let e=document.createElement(`option`);e.value=t.id,e.textContent=t.display_name,e.selected=t.id===r.member,l.appendChild(e)}}catch{f.appendChild(E(`Could not load members.`,()=>p(r)));return}l.addEventListener(`change`,()=>{n.storage.setItem(S,l.value),p({...r,member:l.value})});let m=++o;try{let e=await w(r,n,p);m===o&&f.replaceChildren(e)}catch{f.replaceChildren(E(`Request failed.`,()=>p(r)))}}async function w(e,t,r){if(e.view===`track`)return e.member?y({today:n(t.today),submit:n=>t.api.createEvent({author:e.member,...n})}):T();if(e.view===`catchup`){if(!e.member)return T();let n=await t.api.getCatchup(e.member,e.since,e.hideStale),i=(e.hideStale?await t.api.getCatchup(e.member,e.since,!1):n).total_count-n.total_count,a=document.createElement(`div`);return a.appendChild(O(e,r)),a.appendChild(x(n,i,!e.hideStale,()=>r({...e,hideStale:!e.hideStale}))),a}let i=await t.api.getSummary(e.from,e.to,e.hideStale),a=document.createElement(`div`);return a.appendChild(D(e,r)),a.appendChild(v(i)),a}function T(){let e=document.createElement(`p`);return e.className=`member-prompt`,e.textContent=`Pick your name from the member list first.`,e}function E(e,t){let n=document.createElement(`div`);n.className=`error-panel`;let r=document.createElement(`p`);r.textContent=e;let i=document.createElement(`button`);return i.type=`button`,i.textContent=`Retry`,i.addEventListener(`click`,t),n.append(r,i),n}function D(e,t){let n=document.createElement(`form`);n.className=`period-picker`;let r=k(`from`,e.from),i=k(`to`,e.to),a=A(e.hideStale),o=document.createElement(`button`);return o.type=`submit`,o.textContent=`Show`,n.append(r,i,a.label,o),n.addEventListener(`submit`,n=>{if(n.preventDefault(),r.value>i.value){r.setCustomValidity(`start must not be after end`),r.reportValidity();return}t({...e,from:r.value,to:i.value,hideStale:a.input.checked})}),n}function O(e,t){let n=document.createElement(`form`);n.className=`since-picker`;let r=k(`since`,e.since),i=document.createElement(`button`);return i.type=`submit`,i.textContent=`What did I miss?`,n.append(r,i),n.addEventListener(`submit`,n=>{n.preventDefault(),t({...e,since:r.value})}),n}function k(e,t){let n=document.createElement(`input`);return n.type=`date`,n.name=e,n.value=t,n}function A(e){let t=document.createElement(`label`),n=document.createElement(`input`);return n.type=`checkbox`,n.checked=e,t.append(n,document.createTextNode(` hide stale`)),{label:t,input:n}}if(typeof document<`u`&&document.getElementById(`app`)){let e={api:new t,today:new Date,storage:window.localStorage,onNavigate:e=>window.history.pushState(null,``,e)},n=document.getElementById(`app`);C(n,window.location.search,e),window.addEventListener(`popstate`,()=>{C(n,window.location.search,e)})}