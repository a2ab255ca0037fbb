int main()
{
    char s[1000];
    int times[26] = {0}, i, top = 0;
    scanf("%s", s);
    for (i = 0; s[i]; i++)
        if (s[i] >= 'a' && s[i] <= 'z')
            times[s[i] - 'a']++;
    for (i = 1; i < 26; i++)
        if (times[i] > times[top])
            top = i;
    printf("%c %d\n", 'a' + top, times[top]);
    return 0;
}
