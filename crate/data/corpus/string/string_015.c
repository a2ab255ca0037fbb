// most frequent letter
int main()
{
    char buf[1000];
    int cnt[26] = {0}, idx, mx = 0;
    scanf("%s", buf);
    for (idx = 0; buf[idx]; idx++)
        if (buf[idx] >= 'a' && buf[idx] <= 'z')
            cnt[buf[idx] - 'a']++;
    for (idx = 1; idx < 26; idx++)
        if (cnt[idx] > cnt[mx])
            mx = idx;
    printf("%c %d\n", 'a' + mx, cnt[mx]);
    return 0;
}
