// most frequent letter
int main()
{
    char word[1000];
    int cnt[26] = {0}, p, best = 0;
    scanf("%s", word);
    for (p = 0; word[p]; p++)
        if (word[p] >= 'a' && word[p] <= 'z')
            cnt[word[p] - 'a']++;
    for (p = 1; p < 26; p++)
        if (cnt[p] > cnt[best])
            best = p;
    printf("%c %d\n", 'a' + best, cnt[best]);
    return 0;
}
